"""Recursive BAT-based inclusion-exclusion (RIE) over directed MPs.

Terms are built in BAT order: at stage i every stored term spawns its
intersection with the i-th MP at the opposite sign. Each term costs one join
and one incremental probability product.

Complete-term rules:
  creation  a complete term created before the last stage is dropped with its
            whole subtree (their signed sum is zero); complete terms created at
            the last stage are netted into one Pr(full) correction. Exact.
  all-mp    drop every complete term unless the only one is the all-MP term,
            which is then kept. Not exact when several minimal complete
            subsets exist.
  off       no elimination.
"""

from __future__ import annotations

import logging
import time

from ..augmented import AugmentedVector, combine, join_all, vector_probability
from ..paths import MAX_MPS, check_mps
from .base import IetTerm, ReliabilityReport, TraceRow, empty_report

log = logging.getLogger(__name__)

METHOD = "rie"
COMPLETE_RULES = ("creation", "all-mp", "off")


def rie_reliability(net, mps, complete_rule="creation", on_term=None, max_mps=MAX_MPS):
    if complete_rule not in COMPLETE_RULES:
        raise ValueError(f"unknown complete-term rule {complete_rule!r}")
    check_mps(mps, max_mps)
    if not mps:
        return empty_report(METHOD)

    start = time.perf_counter()
    p = len(mps)
    eliminate = complete_rule != "off"
    full = join_all(mp.augmented for mp in mps)
    full_prob = vector_probability(full, net)

    seed = IetTerm(AugmentedVector.zeros(net.arc_count), -1, 1.0, 0)
    first = mps[0].augmented
    t2 = IetTerm(first, 1, vector_probability(first, net), 1)
    terms = [seed, t2]
    reliability = t2.prob
    num_terms = 1
    eliminated = 0
    net_sign = 0
    complete_seen = 0
    last_complete = None

    if on_term:
        on_term(TraceRow(1, seed, None))
        on_term(TraceRow(2, t2, reliability))

    for i in range(1, p):
        mp_vector = mps[i].augmented
        last_stage = i == p - 1
        bit = 1 << i
        stored = len(terms)

        for k in range(stored):
            parent = terms[k]
            vector, factor = combine(parent.vector, mp_vector, net)
            child = IetTerm(vector, -parent.sign, parent.prob * factor, parent.subset_id | bit)

            if eliminate and vector.mask == full.mask:
                complete_seen += 1
                last_complete = child
                eliminated += 1 << (p - 1 - i)
                if complete_rule == "creation" and last_stage:
                    net_sign += child.sign
                if on_term:
                    on_term(TraceRow(child.subset_id + 1, child, None, complete=True))
                continue

            reliability += child.sign * child.prob
            num_terms += 1
            if not last_stage:
                terms.append(child)
            if on_term:
                on_term(TraceRow(child.subset_id + 1, child, reliability))

        log.debug("rie stage %d/%d: %d stored terms, %d eliminated so far",
                  i + 1, p, len(terms), eliminated)

    if complete_rule == "all-mp" and complete_seen == 1 and last_complete.subset_id == (1 << p) - 1:
        net_sign = last_complete.sign

    reliability += net_sign * full_prob
    elapsed = time.perf_counter() - start
    log.info("rie: R=%.12f, %d terms, %d complete terms eliminated, %.3f ms",
             reliability, num_terms, eliminated, elapsed * 1000)

    return ReliabilityReport(
        method=METHOD,
        reliability=reliability,
        num_mps=p,
        num_terms=num_terms,
        complete_terms_discarded=eliminated,
        complete_net_sign=net_sign,
        elapsed=elapsed,
    )
