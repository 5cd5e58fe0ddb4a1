"""Non-Mersenne numbers nm(k): the naturals >= 2 that are not of the form 2^n - 1.

The sequence is defined by the max-min recursion

    nm(1) = 2,   nm(k) = max_{2 <= i <= k} min(2*i, nm(k-i+1) + i),

which is what bounds the minimum variable degree of lean clause-sets in
terms of their surplus.  Both the recursion and the closed form
``k + fld(k + 1 + fld(k + 1))`` are provided so that each can check the other.
"""

from dataclasses import dataclass

import numpy as np

from .errors import check_guard

#: Arguments beyond this are rejected (machine-integer domain).
MAX_ARGUMENT = 1 << 62

#: Largest table the recursive evaluation will build.
TABLE_GUARD = 10_000_000

#: Start values for the nm_1 variant: nm(1..5) followed by nm(6) - 1.
NM1_BASE = (2, 4, 5, 6, 8, 8)


def fld(x):
    """Floor of log2 for a positive integer, via bit length (exact)."""
    if x < 1:
        raise ValueError(f"fld undefined for {x}")
    return x.bit_length() - 1


def _check_argument(k, lower=1):
    if not isinstance(k, (int, np.integer)) or isinstance(k, bool):
        raise TypeError(f"expected an integer, got {type(k).__name__}")
    k = int(k)
    if k < lower:
        raise ValueError(f"argument must be >= {lower}, got {k}")
    if k > MAX_ARGUMENT:
        raise ValueError(f"argument {k} exceeds the supported range 2^62")
    return k


def nm_closed(k):
    """nm(k) from the closed formula ``k + fld(k + 1 + fld(k + 1))``."""
    k = _check_argument(k)
    return k + fld(k + 1 + fld(k + 1))


def nm1_closed(k):
    """nm_1(k): nm(k) - 1 = 2^m at k = 2^m - m + 1 for m >= 3, else nm(k)."""
    k = _check_argument(k)
    # 2^(m-1) < 2^m - m + 1 <= 2^m for m >= 3, so m is fld(k) + 1 (or + 2 at worst)
    for m in (fld(k) + 1, fld(k) + 2):
        if m >= 3 and (1 << m) - m + 1 == k:
            return 1 << m
    return nm_closed(k)


def jump_set(limit):
    """Positions k <= limit where nm steps by 2, i.e. ``2^(m+1) - m - 2``."""
    limit = _check_argument(limit)
    jumps = []
    m = 1
    while (1 << (m + 1)) - m - 2 <= limit:
        jumps.append((1 << (m + 1)) - m - 2)
        m += 1
    return tuple(jumps)


def _full_step(values, k):
    # values[j] = a(j) for 1 <= j < k; evaluates max_i min(2i, a(k-i+1) + i)
    i = np.arange(2, k + 1, dtype=np.int64)
    shifted = np.asarray(values[k - 1:0:-1], dtype=np.int64)
    return int(np.max(np.minimum(2 * i, shifted + i)))


def _crossing_step(values, k):
    # Valid when values[1..k-1] is strictly increasing: then i - a(k-i+1) is
    # strictly increasing in i, the inner minimum is 2i below the crossing
    # point and a(k-i+1) + i (non-increasing) from it on.
    lo, hi = 2, k
    while lo < hi:
        mid = (lo + hi) // 2
        if mid >= values[k - mid + 1]:
            hi = mid
        else:
            lo = mid + 1
    best = values[k - lo + 1] + lo
    if lo > 2:
        best = max(best, 2 * (lo - 1))
    return best


def recursion_values(limit, base=(2,), method="auto"):
    """Evaluate the max-min recursion for k = 1..limit.

    Returns a list ``v`` with ``v[k]`` the value at k (``v[0]`` is unused).
    ``base`` fixes the values at 1..len(base).  ``method="full"`` takes the
    maximum over every i; ``"auto"`` uses the crossing-point shortcut while the
    computed prefix is strictly increasing and falls back to the full maximum
    otherwise.
    """
    limit = _check_argument(limit)
    check_guard("non-Mersenne table", limit, TABLE_GUARD)
    if method not in ("auto", "full"):
        raise ValueError(f"unknown method {method!r}")
    values = [0]
    increasing = True
    for k in range(1, limit + 1):
        if k <= len(base):
            value = base[k - 1]
        elif method == "auto" and increasing:
            value = _crossing_step(values, k)
        else:
            value = _full_step(values, k)
        if k > 1 and value <= values[-1]:
            increasing = False
        values.append(value)
    return values


@dataclass(frozen=True)
class NonMersenneTable:
    """Values over 1..limit plus the positions where the sequence steps by 2.

    Variants: ``"nm"`` (the recursion), ``"nm1"`` (the sharpened bound for
    minimally unsatisfiable clause-sets) and ``"nm1-recursion"`` (the max-min
    recursion restarted from ``NM1_BASE``; see :func:`nm1_recursive`).
    """

    limit: int
    values: tuple
    jumps: tuple
    variant: str = "nm"

    @classmethod
    def build(cls, limit, variant="nm", method="auto"):
        limit = _check_argument(limit)
        if variant == "nm":
            v = recursion_values(limit + 1, method=method)
        elif variant == "nm1":
            v = [0] + [nm1_closed(k) for k in range(1, limit + 2)]
        elif variant == "nm1-recursion":
            v = recursion_values(limit + 1, base=NM1_BASE, method=method)
        else:
            raise ValueError(f"unknown variant {variant!r}")
        jumps = tuple(k for k in range(1, limit + 1) if v[k + 1] - v[k] == 2)
        return cls(limit, tuple(v[1:limit + 1]), jumps, variant)

    def __call__(self, k):
        if not 1 <= k <= self.limit:
            raise ValueError(f"k={k} outside table range 1..{self.limit}")
        return self.values[k - 1]

    def __len__(self):
        return self.limit

    def aux_indices(self, k):
        return _aux_from(self, k)


@dataclass(frozen=True)
class AuxIndices:
    """i(k), i'(k) = k - i(k) + 1 and h(k) = nm(i'(k)), with nm(k) = h + i."""

    k: int
    i: int
    i_prime: int
    h: int


def _aux_from(table, k):
    if k < 2:
        raise ValueError(f"aux indices need k >= 2, got {k}")
    # i - nm(k - i + 1) is strictly increasing in i
    lo, hi = 2, k
    while lo < hi:
        mid = (lo + hi) // 2
        if mid >= table(k - mid + 1):
            hi = mid
        else:
            lo = mid + 1
    i_prime = k - lo + 1
    return AuxIndices(k, lo, i_prime, table(i_prime))


def nm_recursive(k):
    """nm(k) by evaluating the defining recursion (fresh memo table per call)."""
    k = _check_argument(k)
    return recursion_values(k)[k]


def nm1(k):
    """nm_1(k), the sharpened degree bound for minimally unsatisfiable clause-sets.

    Equal to nm(k) except at k = 2^m - m + 1 (m >= 3), where it is 2^m.
    """
    return nm1_closed(k)


def nm1_recursive(k):
    """The max-min recursion restarted from nm(1..5) and the value 8 at k = 6.

    Agrees with :func:`nm1` for k <= 12 but not at k = 13, 28, 59, ...: at
    k = 13 the branch i = 9 already gives min(18, nm(5) + 9) = 17, so the
    recursion alone only reproduces the drop at k = 6.
    """
    k = _check_argument(k)
    return recursion_values(k, base=NM1_BASE)[k]


def aux_indices(k):
    """The index i(k): smallest i in 2..k with i >= nm(k - i + 1)."""
    k = _check_argument(k, lower=2)
    return _aux_from(NonMersenneTable.build(k), k)


def nm_table(limit, variant="nm"):
    return NonMersenneTable.build(limit, variant=variant)
