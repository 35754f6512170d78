"""Integer partitions, stored as weakly decreasing tuples of positive ints.

The empty tuple () is the unique partition of 0.  All other modules use
these tuples directly as dictionary keys.
"""

from fractions import Fraction
from functools import lru_cache


def check_partition(parts):
    """Validate and canonicalize an iterable of parts into a partition tuple."""
    t = tuple(parts)
    for i, p in enumerate(t):
        if not isinstance(p, int) or p < 1:
            raise ValueError(f"partition parts must be positive integers, got {p!r}")
        if i > 0 and t[i - 1] < p:
            raise ValueError(f"partition parts must be weakly decreasing, got {t}")
    return t


def size(la):
    """|la|, the number being partitioned."""
    return sum(la)


def length(la):
    """ell(la), the number of parts."""
    return len(la)


def multiplicity(la, i):
    """Number of parts of la equal to i."""
    return sum(1 for p in la if p == i)


def conjugate(la):
    """Transpose of the Young diagram."""
    if not la:
        return ()
    cols = [0] * la[0]
    for p in la:
        for j in range(p):
            cols[j] += 1
    return tuple(cols)


def z_factor(la):
    """prod_i i^{m_i} m_i!  -- the Hall norm of a power-sum basis element."""
    z = 1
    i = None
    m = 0
    for p in sorted(la):
        if p == i:
            m += 1
        else:
            i, m = p, 1
        z *= p * m
    return Fraction(z)


@lru_cache(maxsize=None)
def partitions_of(n, max_part=None):
    """All partitions of n with parts <= max_part, as descending tuples."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    if max_part is None or max_part > n:
        max_part = n
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def contains(box, la):
    """Whether la fits inside the partition `box` (componentwise)."""
    if len(la) > len(box):
        return False
    return all(la[i] <= box[i] for i in range(len(la)))


def rectangle(width, height):
    """The partition (width)^height; empty if either side is 0."""
    if width == 0 or height == 0:
        return ()
    return (width,) * height


def merge(la, mu):
    """Union of parts as multisets, re-sorted descending."""
    return tuple(sorted(la + mu, reverse=True))


def remove_one(la, part):
    """la with a single copy of `part` removed; None when absent."""
    if part not in la:
        return None
    out = list(la)
    out.remove(part)
    return tuple(out)


def sign_of_conjugation(la):
    """(-1)^(|la| - ell(la)), the sign picked up by the p-basis involution."""
    return -1 if (size(la) - length(la)) % 2 else 1
