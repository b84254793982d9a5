"""Run all four engines on one network and check that they agree."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .engines import bat_iet_reliability, oracle_reliability, plain_iet_reliability, rie_reliability
from .errors import EngineDisagreementError
from .paths import directed_mps

log = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-9


@dataclass
class EngineComparison:
    reports: dict
    tolerance: float
    max_deviation: float

    @property
    def agreed(self):
        return self.max_deviation <= self.tolerance

    def to_dict(self):
        return {
            "agreed": self.agreed,
            "tolerance": self.tolerance,
            "max_deviation": self.max_deviation,
            "engines": {name: r.to_dict() for name, r in self.reports.items()},
        }


def compare_engines(net, mps=None, tolerance=DEFAULT_TOLERANCE, complete_rule="creation",
                    max_m_star=30, workers=1):
    """Returns an EngineComparison; raises EngineDisagreementError (carrying it)
    when any two engines differ by more than `tolerance`."""
    if mps is None:
        mps = directed_mps(net)

    reports = {
        "rie": rie_reliability(net, mps, complete_rule=complete_rule),
        "bat-iet": bat_iet_reliability(net, mps),
        "iet": plain_iet_reliability(net, mps),
        "oracle": oracle_reliability(net, max_m_star=max_m_star, workers=workers),
    }
    values = [r.reliability for r in reports.values()]
    comparison = EngineComparison(
        reports=reports,
        tolerance=tolerance,
        max_deviation=max(values) - min(values),
    )
    for name, r in reports.items():
        log.debug("%-8s R=%.12f terms=%d %.3f ms", name, r.reliability, r.num_terms, r.elapsed_ms)

    if not comparison.agreed:
        raise EngineDisagreementError(comparison)
    return comparison
