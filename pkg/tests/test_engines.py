import pytest

from netrel.augmented import join_all, vector_probability
from netrel.engines import (
    bat_iet_reliability,
    oracle_reliability,
    plain_iet_reliability,
    rie_reliability,
)
from netrel.errors import InstanceTooLargeError
from netrel.network import Network
from netrel.paths import directed_mps, parse_mp_file

BRIDGE_R = 0.97767


def _rows(engine, net, mps, **kwargs):
    rows = []
    report = engine(net, mps, on_term=rows.append, **kwargs)
    return report, rows


# --- worked example ---------------------------------------------------------

def test_rie_bridge(bridge, bridge_mps):
    r = rie_reliability(bridge, bridge_mps)
    assert r.reliability == pytest.approx(BRIDGE_R, abs=1e-12)
    assert r.num_mps == 4
    assert r.num_terms == 11
    assert r.complete_terms_discarded == 4
    assert r.complete_net_sign == 0


TRACE_ROWS = [
    # index, vector, Pr, sign, running R
    (2, (1, 0, 0, 1, 0), 0.81, 1, 0.81),
    (3, (1, 0, 1, 0, 1), 0.729, 1, 1.539),
    (4, (1, 0, 1, 1, 1), 0.6561, -1, 0.8829),
    (5, (0, 1, 0, 0, 1), 0.81, 1, 1.6929),
    (6, (1, 1, 0, 1, 1), 0.6561, -1, 1.0368),
    (7, (1, 1, 1, 0, 1), 0.6561, -1, 0.3807),
    (8, (1, 1, 1, 1, 1), 0.59049, 1, 0.97119),
    (9, (0, 1, 2, 1, 0), 0.648, 1, 1.61919),
    (10, (1, 1, 2, 1, 0), 0.5832, -1, 1.03599),
    (13, (0, 1, 2, 1, 1), 0.5832, -1, 0.45279),
    (14, (1, 1, 2, 1, 1), 0.52488, 1, 0.97767),
]


def test_rie_bridge_trace(bridge, bridge_mps):
    _, rows = _rows(rie_reliability, bridge, bridge_mps)
    assert [row.index for row in rows] == list(range(1, 17))
    assert rows[0].running is None
    assert rows[0].term.sign == -1
    assert {row.index for row in rows if row.complete} == {11, 12, 15, 16}

    kept = [row for row in rows[1:] if not row.complete]
    assert [row.index for row in kept] == [index for index, *_ in TRACE_ROWS]
    for row, (index, states, prob, sign, running) in zip(kept, TRACE_ROWS):
        assert row.term.vector.states == states, f"row {index}"
        assert row.term.prob == pytest.approx(prob, abs=1e-12), f"row {index}"
        assert row.term.sign == sign, f"row {index}"
        assert row.running == pytest.approx(running, abs=1e-9), f"row {index}"
    assert rows[9].term.subset_bits(4) == (1, 0, 0, 1)


def test_trace_index_is_subset_position(diamonds):
    # the first two MPs already cover every direction, so their pair and its
    # descendants drop out at stage 2
    order = parse_mp_file("1 2 4 5 7\n1 3 4 6 7\n1 2 4 6 7\n1 3 4 5 7\n", diamonds)
    mps = directed_mps(diamonds, order=order)
    report, rows = _rows(rie_reliability, diamonds, mps)
    for row in rows:
        assert row.index == row.term.subset_id + 1, f"subset {row.term.subset_bits(4)}"
    assert [row.index for row in rows if not row.complete] == [1, 2, 3, 5, 6, 7, 9, 10, 11]
    assert [row.index for row in rows if row.complete] == [4, 13, 14, 15]
    _, bat_rows = _rows(bat_iet_reliability, diamonds, mps)
    assert all(row.index == row.term.subset_id + 1 for row in bat_rows)
    assert report.reliability == pytest.approx(oracle_reliability(diamonds).reliability, abs=1e-12)


def test_bat_iet_bridge_matches_rie_rows(bridge, bridge_mps):
    report, rows = _rows(bat_iet_reliability, bridge, bridge_mps)
    assert report.reliability == pytest.approx(BRIDGE_R, abs=1e-12)
    assert report.num_terms == 15
    _, rie_rows = _rows(rie_reliability, bridge, bridge_mps, complete_rule="off")
    rie_by_index = {row.index: row.term for row in rie_rows}
    for row in rows:
        other = rie_by_index[row.index]
        assert row.term.subset_id == other.subset_id
        assert row.term.vector == other.vector
        assert row.term.sign == other.sign
        assert row.term.prob == pytest.approx(other.prob, abs=1e-12)


def test_plain_iet_bridge(bridge, bridge_mps):
    report, rows = _rows(plain_iet_reliability, bridge, bridge_mps)
    assert report.reliability == pytest.approx(BRIDGE_R, abs=1e-12)
    assert report.num_terms == 15
    pair = next(row.term for row in rows if row.term.subset_id == 0b1010)
    assert pair.sign == -1
    assert pair.prob == pytest.approx(0.472392, abs=1e-12)


def test_oracle_bridge(bridge):
    report = oracle_reliability(bridge)
    assert report.reliability == pytest.approx(BRIDGE_R, abs=1e-12)
    assert report.num_states == 64
    assert report.to_dict()["num_states"] == 64


def test_oracle_workers_agree(bridge):
    single = oracle_reliability(bridge, workers=1)
    split = oracle_reliability(bridge, workers=3)
    assert split.reliability == pytest.approx(single.reliability, abs=1e-12)


def test_oracle_budget(bridge):
    with pytest.raises(InstanceTooLargeError):
        oracle_reliability(bridge, max_m_star=5)


# --- complete-term rules ----------------------------------------------------

def test_rules_on_diamonds(diamonds, diamonds_exact):
    mps = directed_mps(diamonds)
    creation = rie_reliability(diamonds, mps)
    off = rie_reliability(diamonds, mps, complete_rule="off")
    all_mp = rie_reliability(diamonds, mps, complete_rule="all-mp")
    full_prob = vector_probability(join_all(mp.augmented for mp in mps), diamonds)

    assert creation.reliability == pytest.approx(diamonds_exact, abs=1e-12)
    assert off.reliability == pytest.approx(diamonds_exact, abs=1e-12)
    assert oracle_reliability(diamonds).reliability == pytest.approx(diamonds_exact, abs=1e-12)
    assert (creation.num_terms, creation.complete_terms_discarded, creation.complete_net_sign) == (8, 7, 1)
    assert off.num_terms == 15
    assert all_mp.complete_net_sign == 0
    assert all_mp.reliability == pytest.approx(diamonds_exact - full_prob, abs=1e-12)


def test_all_mp_rule_exact_on_bridge(bridge, bridge_mps):
    assert rie_reliability(bridge, bridge_mps, complete_rule="all-mp").reliability == pytest.approx(
        BRIDGE_R, abs=1e-12
    )


def test_unknown_rule(bridge, bridge_mps):
    with pytest.raises(ValueError):
        rie_reliability(bridge, bridge_mps, complete_rule="sometimes")


# --- small cases ------------------------------------------------------------

def test_single_mp():
    net = Network.build(2, 1, 2, [(1, 2, 0.7, 0.1)])
    mps = directed_mps(net)
    for engine in (rie_reliability, bat_iet_reliability, plain_iet_reliability):
        report = engine(net, mps)
        assert report.reliability == pytest.approx(0.7)
        assert report.num_terms == 1
    assert oracle_reliability(net).reliability == pytest.approx(0.7)


def test_unreachable_sink():
    net = Network.build(3, 1, 3, [(1, 2, 0.9, 0.9)])
    mps = directed_mps(net)
    assert mps == []
    for engine in (rie_reliability, bat_iet_reliability, plain_iet_reliability):
        report = engine(net, mps)
        assert (report.reliability, report.num_terms) == (0.0, 0)
    assert oracle_reliability(net).reliability == 0.0


def test_zero_and_one_probabilities():
    net = Network.build(3, 1, 3, [(1, 2, 1.0, 0.0), (2, 3, 1.0, 0.0), (1, 3, 0.0, 1.0)])
    mps = directed_mps(net)
    for engine in (rie_reliability, bat_iet_reliability, plain_iet_reliability):
        assert engine(net, mps).reliability == pytest.approx(1.0, abs=1e-12)
    assert oracle_reliability(net).reliability == pytest.approx(1.0, abs=1e-12)


def test_too_many_mps(bridge, bridge_mps):
    for engine in (rie_reliability, bat_iet_reliability, plain_iet_reliability):
        with pytest.raises(InstanceTooLargeError):
            engine(bridge, bridge_mps, max_mps=3)


# --- seeded suite ----------------------------------------------------------

def test_engines_agree_with_oracle(random_suite):
    for seed, net, mps in random_suite:
        expected = oracle_reliability(net).reliability
        assert 0.0 <= expected <= 1.0 + 1e-12, f"seed {seed}"
        for engine in (rie_reliability, bat_iet_reliability, plain_iet_reliability):
            got = engine(net, mps).reliability
            assert got == pytest.approx(expected, abs=1e-10), f"{engine.__name__} seed {seed}"


def test_elimination_is_sound(random_suite):
    for seed, net, mps in random_suite:
        on = rie_reliability(net, mps)
        off = rie_reliability(net, mps, complete_rule="off")
        assert on.reliability == pytest.approx(off.reliability, abs=1e-12), f"seed {seed}"


def test_count_law(random_suite):
    for seed, net, mps in random_suite:
        r = rie_reliability(net, mps)
        if not mps:
            assert r.num_terms == 0
            continue
        assert r.num_terms + r.complete_terms_discarded == 2 ** len(mps) - 1, f"seed {seed}"
        assert rie_reliability(net, mps, complete_rule="off").num_terms == 2 ** len(mps) - 1


def test_terms_are_subset_joins_with_alternating_sign(random_suite):
    for seed, net, mps in random_suite[:60]:
        if not mps:
            continue
        _, rows = _rows(rie_reliability, net, mps, complete_rule="off")
        for row in rows[1:]:
            term = row.term
            members = [mps[k].augmented for k in range(len(mps)) if term.subset_id >> k & 1]
            assert term.vector == join_all(members), f"seed {seed} row {row.index}"
            assert term.prob == pytest.approx(vector_probability(term.vector, net), abs=1e-12)
            assert term.sign == (1 if term.size % 2 else -1)


def test_reliability_is_monotone(random_suite):
    for seed, net, _ in random_suite[:16]:
        base = oracle_reliability(net).reliability
        for k, arc in enumerate(net.arcs):
            arcs = [(a.i, a.j, a.p_fwd, a.p_bwd) for a in net.arcs]
            arcs[k] = (arc.i, arc.j, min(1.0, arc.p_fwd + 0.1), arc.p_bwd)
            bumped = Network.build(net.n, net.source, net.sink, arcs)
            assert oracle_reliability(bumped).reliability >= base - 1e-12, f"seed {seed} arc {arc.key}"
