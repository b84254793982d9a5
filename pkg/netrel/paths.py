"""Minimal paths: exhaustive enumeration, orientation, MP files.

With perfect nodes and no parallel arcs a minimal path is exactly a simple
source-sink path, so enumeration is a depth-first walk over simple paths.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

from .augmented import AugmentedVector
from .errors import InstanceTooLargeError, NetworkFileError, NetworkFormatError, NetworkValidationError

log = logging.getLogger(__name__)

# Term subset identifiers index 2^p subsets of MPs in a 64-bit word.
MAX_MPS = 62


@dataclass(frozen=True)
class UndirectedMP:
    nodes: tuple[int, ...]

    @property
    def arcs(self):
        return tuple((min(a, b), max(a, b)) for a, b in zip(self.nodes, self.nodes[1:]))

    def __str__(self):
        return "-".join(str(v) for v in self.nodes)


@dataclass(frozen=True)
class DirectedMP:
    arcs: tuple[tuple[int, int], ...]
    augmented: AugmentedVector

    @property
    def nodes(self):
        if not self.arcs:
            return ()
        return (self.arcs[0][0],) + tuple(head for _, head in self.arcs)

    def __str__(self):
        return " ".join(f"e_{{{t},{h}}}" for t, h in self.arcs)


def _expansion_order(net, v):
    # sink first when adjacent, then the other neighbors ascending
    nbrs = net.neighbors(v)
    if net.sink in nbrs:
        return (net.sink,) + tuple(u for u in nbrs if u != net.sink)
    return nbrs


def enumerate_undirected_mps(net, limit=None):
    """All simple source-sink paths in deterministic depth-first order.

    Raises InstanceTooLargeError as soon as more than `limit` paths are found.
    """
    found = []
    path = [net.source]
    on_path = {net.source}
    stack = [iter(_expansion_order(net, net.source))]

    while stack:
        child = next(stack[-1], None)
        if child is None:
            stack.pop()
            on_path.discard(path.pop())
            continue
        if child == net.sink:
            found.append(UndirectedMP(tuple(path) + (child,)))
            if limit is not None and len(found) > limit:
                raise InstanceTooLargeError(f"more than {limit} minimal paths")
            continue
        if child in on_path:
            continue
        path.append(child)
        on_path.add(child)
        stack.append(iter(_expansion_order(net, child)))

    log.debug("enumerated %d minimal paths", len(found))
    return found


def orient_steps(q):
    """Replay the orientation walk: yields (l, j, k, arcs so far) per arc, where
    the l-th arc of q is traversed from j to its other endpoint k."""
    oriented = []
    for l, (j, k) in enumerate(zip(q.nodes, q.nodes[1:]), 1):
        oriented.append((j, k))
        yield l, j, k, tuple(oriented)


def mp_to_augmented(arcs, net):
    """Directed arc sequence -> augmented vector (1 forward, 2 backward, 0 unused)."""
    mask = 0
    for tail, head in arcs:
        c = net.coordinate(tail, head)
        mask |= (1 if tail < head else 2) << (2 * c)
    return AugmentedVector(mask, net.arc_count)


def direct_mp(q, net):
    steps = list(orient_steps(q))
    arcs = steps[-1][3] if steps else ()
    return DirectedMP(arcs=arcs, augmented=mp_to_augmented(arcs, net))


def check_path(nodes, net, lineno=None):
    if len(nodes) < 2:
        raise NetworkValidationError("a path needs at least two nodes", lineno)
    if nodes[0] != net.source or nodes[-1] != net.sink:
        raise NetworkValidationError(
            f"path must run from source {net.source} to sink {net.sink}", lineno
        )
    if len(set(nodes)) != len(nodes):
        raise NetworkValidationError("path repeats a node", lineno)
    for a, b in zip(nodes, nodes[1:]):
        if not net.has_arc(a, b):
            raise NetworkValidationError(f"no arc between {a} and {b}", lineno)


def parse_mp_file(text, net):
    """One MP per line as space-separated node ids; `#` comments."""
    mps = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            nodes = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise NetworkFormatError(f"node ids must be integers: {line!r}", lineno) from None
        check_path(nodes, net, lineno)
        if nodes in seen:
            raise NetworkValidationError(f"duplicate MP (first on line {seen[nodes]})", lineno)
        seen[nodes] = lineno
        mps.append(UndirectedMP(nodes))
    return mps


def load_mp_file(path, net):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise NetworkFileError(path, e.strerror if isinstance(e, OSError) and e.strerror else e) from e
    return parse_mp_file(text, net)


def check_mps(mps, max_mps=MAX_MPS):
    """Engine precondition: at most `max_mps` pairwise distinct directed MPs."""
    if len(mps) > max_mps:
        raise InstanceTooLargeError(f"{len(mps)} minimal paths exceed the limit of {max_mps}")
    seen = set()
    for idx, mp in enumerate(mps, 1):
        if mp.arcs in seen:
            raise NetworkValidationError(f"duplicate MP P_{idx} = {mp}")
        seen.add(mp.arcs)


def directed_mps(net, order=None, max_mps=MAX_MPS):
    """Directed MPs in enumeration order, or in the order of `order` (undirected MPs)."""
    if order is None:
        order = enumerate_undirected_mps(net, limit=max_mps)
    else:
        for q in order:
            check_path(q.nodes, net)
    mps = [direct_mp(q, net) for q in order]
    check_mps(mps, max_mps)
    return mps
