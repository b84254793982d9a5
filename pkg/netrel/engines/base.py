"""Types shared by the reliability engines."""

from __future__ import annotations

from dataclasses import dataclass

from ..augmented import AugmentedVector


@dataclass(frozen=True)
class IetTerm:
    """One inclusion-exclusion term: the intersection of the MPs in `subset_id`
    (bit k set = MP k+1 used)."""

    vector: AugmentedVector
    sign: int
    prob: float
    subset_id: int

    @property
    def size(self):
        return bin(self.subset_id).count("1")

    def subset_bits(self, p):
        """The subset as a BAT vector over p MPs, first MP first."""
        return tuple((self.subset_id >> k) & 1 for k in range(p))


@dataclass(frozen=True)
class TraceRow:
    """`index` is the 1-based BAT position of the term's MP subset (subset_id + 1)."""

    index: int
    term: IetTerm
    running: float | None
    complete: bool = False


@dataclass
class ReliabilityReport:
    method: str
    reliability: float
    num_mps: int
    num_terms: int
    complete_terms_discarded: int = 0
    complete_net_sign: int = 0
    elapsed: float = 0.0
    num_states: int = 0

    @property
    def elapsed_ms(self):
        return self.elapsed * 1000.0

    def to_dict(self):
        data = {
            "method": self.method,
            "reliability": self.reliability,
            "num_mps": self.num_mps,
            "num_terms": self.num_terms,
            "complete_terms_discarded": self.complete_terms_discarded,
            "complete_net_sign": self.complete_net_sign,
            "elapsed_ms": self.elapsed_ms,
        }
        if self.num_states:
            data["num_states"] = self.num_states
        return data


def empty_report(method):
    """No MP: source cannot reach sink."""
    return ReliabilityReport(method=method, reliability=0.0, num_mps=0, num_terms=0)
