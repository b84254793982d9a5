"""Augmented-state vectors: one four-state coordinate per undirected arc.

State 0 = no direction, 1 = forward (i->j), 2 = backward (j->i), 3 = both.
A vector is packed two bits per coordinate into one int, so the state of
coordinate c is `(mask >> 2c) & 3` and combining two vectors is a bitwise OR.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .errors import VectorLengthError


@dataclass(frozen=True)
class AugmentedVector:
    mask: int
    length: int

    @classmethod
    def zeros(cls, length):
        return cls(0, length)

    @classmethod
    def from_states(cls, states):
        mask = 0
        for c, s in enumerate(states):
            if s not in (0, 1, 2, 3):
                raise ValueError(f"coordinate {c} has state {s}, expected 0..3")
            mask |= s << (2 * c)
        return cls(mask, len(states))

    @property
    def states(self):
        return tuple((self.mask >> (2 * c)) & 3 for c in range(self.length))

    def __getitem__(self, c):
        if not 0 <= c < self.length:
            raise IndexError(c)
        return (self.mask >> (2 * c)) & 3

    def covers(self, other):
        """True if every direction present in `other` is present here."""
        _check_lengths(self, other)
        return other.mask & ~self.mask == 0

    def directed_arcs(self, net):
        """The set of directed arcs (tail, head) this vector stands for."""
        _check_lengths(self, net.arc_count)
        arcs = set()
        for arc, s in zip(net.arcs, self.states):
            if s & 1:
                arcs.add((arc.i, arc.j))
            if s & 2:
                arcs.add((arc.j, arc.i))
        return arcs

    def __str__(self):
        return "(" + ", ".join(str(s) for s in self.states) + ")"


def _check_lengths(a, b):
    la = a.length if isinstance(a, AugmentedVector) else a
    lb = b.length if isinstance(b, AugmentedVector) else b
    if la != lb:
        raise VectorLengthError(f"vector length mismatch: {la} != {lb}")


def _bits_product(bits, probs):
    factor = 1.0
    while bits:
        low = bits & -bits
        factor *= probs[low.bit_length() - 1]
        bits ^= low
    return factor


def combine(t, p, net):
    """Intersect term `t` with MP `p`: join the vectors and return the factor of
    the newly set direction bits, so child probability = parent probability * factor."""
    _check_lengths(t, p)
    _check_lengths(t, net.arc_count)
    joined = t.mask | p.mask
    factor = _bits_product(joined & ~t.mask, net.direction_probs)
    return AugmentedVector(joined, t.length), factor


def vector_probability(v, net):
    _check_lengths(v, net.arc_count)
    return _bits_product(v.mask, net.direction_probs)


def is_complete(v, full):
    _check_lengths(v, full)
    return v.mask == full.mask


def join_all(vectors, length=None):
    """Coordinate-wise join. With no vectors, `length` gives the zero vector's size."""
    vectors = list(vectors)
    if not vectors:
        if length is None:
            raise ValueError("join_all of nothing needs an explicit length")
        return AugmentedVector.zeros(length)
    for v in vectors[1:]:
        _check_lengths(vectors[0], v)
    return AugmentedVector(reduce(lambda acc, v: acc | v.mask, vectors, 0), vectors[0].length)
