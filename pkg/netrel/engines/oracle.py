"""Brute-force oracle: every up/down state of the usable directed arcs.

For each state the sink is checked for reachability from the source over the
working directions; connected states contribute the product of working
probabilities and failed complements. The state space can be split across
worker processes by fixing the last few directions per chunk.
"""

from __future__ import annotations

import logging
import math
import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor

from ..bat import bat_enumerate
from ..errors import InstanceTooLargeError
from ..network import reduce_arcs
from .base import ReliabilityReport

log = logging.getLogger(__name__)

METHOD = "oracle"
DEFAULT_MAX_M_STAR = 30


def _reaches(source, sink, out_arcs, state):
    seen = {source}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for idx, head in out_arcs.get(v, ()):
            if state[idx] and head not in seen:
                if head == sink:
                    return True
                seen.add(head)
                queue.append(head)
    return False


def _state_probability(state, probs):
    return math.prod(p if up else 1.0 - p for up, p in zip(state, probs))


def _chunk_reliability(source, sink, directions, fixed):
    """Sum over the states whose last len(fixed) directions equal `fixed`."""
    probs = [p for _, _, p in directions]
    out_arcs = {}
    for idx, (tail, head, _) in enumerate(directions):
        out_arcs.setdefault(tail, []).append((idx, head))

    free = len(directions) - len(fixed)
    total = 0.0

    if free == 0:
        state = list(fixed)
        if _reaches(source, sink, out_arcs, state):
            total = _state_probability(state, probs)
        return total

    def visit(x):
        nonlocal total
        state = x + fixed
        if _reaches(source, sink, out_arcs, state):
            total += _state_probability(state, probs)

    bat_enumerate(free, visit)
    return total


def _split_bits(m_star, workers):
    if workers <= 1 or m_star == 0:
        return 0
    return min(m_star, math.ceil(math.log2(workers)))


def oracle_reliability(net, max_m_star=DEFAULT_MAX_M_STAR, workers=1):
    reduced = reduce_arcs(net)
    directions = reduced.directions()
    m_star = len(directions)
    if m_star > max_m_star:
        raise InstanceTooLargeError(
            f"oracle needs 2^{m_star} states; budget is m_star <= {max_m_star}"
        )

    start = time.perf_counter()
    split = _split_bits(m_star, workers)
    # fixed suffixes in BAT order over the split directions
    suffixes = [[(c >> b) & 1 for b in range(split)] for c in range(1 << split)]

    if m_star == 0:
        reliability = 0.0
    elif split == 0:
        reliability = _chunk_reliability(net.source, net.sink, directions, [])
    else:
        log.debug("oracle: %d chunks over %d workers", len(suffixes), workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(
                _chunk_reliability,
                [net.source] * len(suffixes),
                [net.sink] * len(suffixes),
                [directions] * len(suffixes),
                suffixes,
            )
            reliability = sum(parts)

    elapsed = time.perf_counter() - start
    log.info("oracle: R=%.12f over 2^%d states, %.3f ms", reliability, m_star, elapsed * 1000)

    return ReliabilityReport(
        method=METHOD,
        reliability=reliability,
        num_mps=0,
        num_terms=0,
        elapsed=elapsed,
        num_states=1 << m_star,
    )
