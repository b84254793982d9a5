"""Plain inclusion-exclusion over explicit directed-arc sets.

Sums, for k = 1..p, (-1)^(k+1) times the probability of every union of k MPs
chosen without replacement. No augmented vectors and no term elimination; this
is the all-terms baseline the recursive engine is measured against.
"""

from __future__ import annotations

import itertools
import logging
import math
import time

from ..paths import MAX_MPS, check_mps, mp_to_augmented
from .base import IetTerm, ReliabilityReport, TraceRow, empty_report

log = logging.getLogger(__name__)

METHOD = "iet"


def plain_iet_reliability(net, mps, on_term=None, max_mps=MAX_MPS):
    check_mps(mps, max_mps)
    if not mps:
        return empty_report(METHOD)

    start = time.perf_counter()
    p = len(mps)
    arc_sets = [frozenset(mp.arcs) for mp in mps]
    reliability = 0.0
    num_terms = 0

    for k in range(1, p + 1):
        sign = 1 if k % 2 else -1
        for combo in itertools.combinations(range(p), k):
            union = frozenset().union(*(arc_sets[c] for c in combo))
            prob = math.prod(net.direction_prob(t, h) for t, h in sorted(union))
            reliability += sign * prob
            num_terms += 1
            if on_term:
                term = IetTerm(
                    vector=mp_to_augmented(union, net),
                    sign=sign,
                    prob=prob,
                    subset_id=sum(1 << c for c in combo),
                )
                on_term(TraceRow(num_terms, term, reliability))

    elapsed = time.perf_counter() - start
    log.info("iet: R=%.12f, %d terms, %.3f ms", reliability, num_terms, elapsed * 1000)

    return ReliabilityReport(
        method=METHOD,
        reliability=reliability,
        num_mps=p,
        num_terms=num_terms,
        elapsed=elapsed,
    )
