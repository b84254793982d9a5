import pytest

from netrel import bundled
from netrel.generator import GeneratorConfig, generate
from netrel.network import Network, load_network
from netrel.paths import directed_mps, load_mp_file

SUITE_SIZE = 200


@pytest.fixture(scope="session")
def bridge():
    return load_network(bundled("fig1.net"))


@pytest.fixture(scope="session")
def bridge_mps(bridge):
    order = load_mp_file(bundled("fig1.mps"), bridge)
    return directed_mps(bridge, order=order)


DIAMOND_ARCS = [
    (1, 2, 0.9, 0.5),
    (1, 3, 0.8, 0.4),
    (2, 4, 0.7, 0.3),
    (3, 4, 0.95, 0.2),
    (4, 5, 0.85, 0.6),
    (4, 6, 0.75, 0.1),
    (5, 7, 0.65, 0.7),
    (6, 7, 0.9, 0.35),
]


@pytest.fixture(scope="session")
def diamonds():
    """Two diamonds in series through cut node 4. Its four MPs have two
    distinct minimal complete subsets: {P_1, P_4} and {P_2, P_3}."""
    return Network.build(7, 1, 7, DIAMOND_ARCS)


@pytest.fixture(scope="session")
def diamonds_exact():
    p = {(i, j): fwd for i, j, fwd, _ in DIAMOND_ARCS}
    left = 1 - (1 - p[1, 2] * p[2, 4]) * (1 - p[1, 3] * p[3, 4])
    right = 1 - (1 - p[4, 5] * p[5, 7]) * (1 - p[4, 6] * p[6, 7])
    return left * right


def _snap_extremes(net):
    # every other arc gets a certain or impossible forward direction
    arcs = []
    for k, a in enumerate(net.arcs):
        p_fwd = (1.0 if a.p_fwd >= 0.5 else 0.0) if k % 2 == 0 else a.p_fwd
        arcs.append((a.i, a.j, p_fwd, a.p_bwd))
    return Network.build(net.n, net.source, net.sink, arcs)


def suite_instance(seed):
    n = 3 + seed % 4
    lo = n - 1
    hi = min(8, n * (n - 1) // 2)
    net = generate(GeneratorConfig(
        n=n,
        arc_count=lo + (seed // 4) % (hi - lo + 1),
        seed=seed,
        homogeneous=seed % 5 == 0,
    ))
    if seed % 7 == 3:
        net = _snap_extremes(net)
    return net


@pytest.fixture(scope="session")
def random_suite():
    """(seed, network, directed MPs) for the seeded property suite."""
    suite = []
    for seed in range(SUITE_SIZE):
        net = suite_instance(seed)
        suite.append((seed, net, directed_mps(net)))
    return suite
