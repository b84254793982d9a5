"""Binary-addition-tree (BAT) enumeration of all m-tuple binary vectors.

One working vector, starting at all-zeros, is updated in place: scanning from
the first coordinate, every leading 1 is reset to 0 and the first 0 becomes 1.
The walk halts once the all-ones vector has been produced.
"""

from __future__ import annotations

from .errors import InstanceTooLargeError

MAX_BAT_LENGTH = 62


def bat_next(x):
    """Successor of x under the BAT rule, or None when x is all ones."""
    y = list(x)
    for i, bit in enumerate(y):
        if bit == 0:
            y[i] = 1
            return tuple(y)
        y[i] = 0
    return None


def _check_length(m):
    if m < 1:
        raise ValueError(f"BAT length must be at least 1, got {m}")
    if m > MAX_BAT_LENGTH:
        raise InstanceTooLargeError(f"BAT length {m} exceeds {MAX_BAT_LENGTH}")


def bat_enumerate(m, visit):
    """Call visit(x) for all 2^m vectors and return the count.

    `x` is the single working list, mutated between calls; callers must copy it
    to keep a vector.
    """
    _check_length(m)
    x = [0] * m
    count = 1
    visit(x)
    i = 0
    while True:
        if x[i] == 0:
            x[i] = 1
            count += 1
            visit(x)
            i = 0
        elif i == m - 1:
            return count
        else:
            x[i] = 0
            i += 1


def iter_bat(m):
    """Generator form of bat_enumerate, yielding tuples."""
    _check_length(m)
    x = (0,) * m
    while x is not None:
        yield x
        x = bat_next(x)
