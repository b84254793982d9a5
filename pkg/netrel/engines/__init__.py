"""Reliability engines. Every engine returns a ReliabilityReport."""

from .base import IetTerm, ReliabilityReport, TraceRow
from .bat_iet import bat_iet_reliability
from .oracle import oracle_reliability
from .plain_iet import plain_iet_reliability
from .rie import COMPLETE_RULES, rie_reliability

# MP-based engines by CLI method name; the oracle works on the network alone.
MP_ENGINES = {
    "rie": rie_reliability,
    "bat-iet": bat_iet_reliability,
    "iet": plain_iet_reliability,
}
METHODS = tuple(MP_ENGINES) + ("oracle",)

__all__ = [
    "COMPLETE_RULES",
    "IetTerm",
    "METHODS",
    "MP_ENGINES",
    "ReliabilityReport",
    "TraceRow",
    "bat_iet_reliability",
    "oracle_reliability",
    "plain_iet_reliability",
    "rie_reliability",
]
