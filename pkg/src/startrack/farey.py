"""Farey-graph arithmetic on [0, 1/2] with exact rationals.

Everything here is integer arithmetic on ``fractions.Fraction`` values,
which are always kept in lowest terms.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import NotNeighbours, OutOfRange

HALF = Fraction(1, 2)


def as_fraction(x) -> Fraction:
    """Accept a Fraction, an int, a (num, den) pair or a string like '3/10'."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, tuple):
        return Fraction(*x)
    return Fraction(x)


def parse_rational(text: str) -> Fraction:
    """Parse 'm/n'; the written fraction must already be in lowest terms."""
    text = text.strip()
    if "/" in text:
        num, den = (int(part) for part in text.split("/"))
        if den <= 0 or gcd(num, den) != 1:
            raise ValueError(f"{text!r} is not a reduced fraction")
        return Fraction(num, den)
    return Fraction(int(text))


def _open_slope(x) -> Fraction:
    x = as_fraction(x)
    if not 0 < x < HALF:
        raise OutOfRange(f"{x} is not in (0, 1/2)")
    return x


def farey_parents(x) -> tuple:
    """(LFP(x), RFP(x)): the two Farey neighbours whose mediant is x."""
    x = as_fraction(x)
    if not 0 < x <= HALF:
        raise OutOfRange(f"{x} is not in (0, 1/2]")
    m, n = x.numerator, x.denominator
    if n == 2:
        return Fraction(0), Fraction(1)
    # the left parent u/v solves m*v - u*n = 1 with 0 < v < n
    v = pow(m, -1, n)
    u = (m * v - 1) // n
    left = Fraction(u, v)
    right = Fraction(m - u, n - v)
    assert left.numerator + right.numerator == m and left.denominator + right.denominator == n
    return left, right


def left_farey_sequence(x) -> list:
    """LFS(x) = (0, ..., LFP(LFP(x)), LFP(x)), ordered upward from 0."""
    x = _open_slope(x)
    chain = []
    current = x
    while current != 0:
        current = farey_parents(current)[0]
        chain.append(current)
    return chain[::-1]


def are_neighbours(a, b) -> bool:
    a, b = as_fraction(a), as_fraction(b)
    return abs(b.numerator * a.denominator - a.numerator * b.denominator) == 1


def mediant(a, b) -> Fraction:
    a, b = as_fraction(a), as_fraction(b)
    return Fraction(a.numerator + b.numerator, a.denominator + b.denominator)


def left_child(x) -> Fraction:
    return mediant(farey_parents(x)[0], x)


def right_child(x) -> Fraction:
    return mediant(x, farey_parents(x)[1])


def orbit_segment(x, r: int, s: int) -> list:
    """O_x[r, s]: r, r+m, r+2m, ... (mod n), stopping at the first s."""
    x = as_fraction(x)
    m, n = x.numerator, x.denominator
    r, s = r % n, s % n
    members = [r]
    while members[-1] != s:
        members.append((members[-1] + m) % n)
    return members


def xi_map(left, right, t) -> Fraction:
    """The increasing bijection (0,1) -> (left, right) for Farey neighbours left < right."""
    left, right, t = as_fraction(left), as_fraction(right), as_fraction(t)
    if not left < right or not are_neighbours(left, right):
        raise NotNeighbours(f"{left} and {right} are not Farey neighbours")
    if not 0 < t < 1:
        raise OutOfRange(f"{t} is not in (0, 1)")
    u, v = left.numerator, left.denominator
    p, q = right.numerator, right.denominator
    r, s = t.numerator, t.denominator
    return Fraction(r * p + (s - r) * u, r * q + (s - r) * v)


def xi_inverse(left, right, x) -> Fraction:
    left, right, x = as_fraction(left), as_fraction(right), as_fraction(x)
    if not left < right or not are_neighbours(left, right):
        raise NotNeighbours(f"{left} and {right} are not Farey neighbours")
    if not left < x < right:
        raise OutOfRange(f"{x} is not between {left} and {right}")
    u, v = left.numerator, left.denominator
    p, q = right.numerator, right.denominator
    m, n = x.numerator, x.denominator
    return Fraction(v * m - u * n, (v - q) * m + (p - u) * n)


def admissible_direct(x) -> list:
    """Admissible k straight from the definition: [k+1, m-1] misses O[k, 0]."""
    x = _open_slope(x)
    m = x.numerator
    result = []
    for k in range(m):
        seg = orbit_segment(x, k, 0)
        if not any(k + 1 <= r <= m - 1 for r in seg):
            result.append(k)
    return result


@lru_cache(maxsize=None)
def _admissible_recursive(m: int, n: int) -> tuple:
    if m == 1:
        return (0,)
    x = Fraction(m, n)
    parent = farey_parents(x)[0]
    parent_set = set(_admissible_recursive(parent.numerator, parent.denominator))
    removed = set(orbit_segment(x, m, n - 1))
    found = []
    count = 0
    for k in range(m - 1):
        if k in removed:
            count += 1
            continue
        if k - count in parent_set:
            found.append(k)
    found.append(m - 1)
    return tuple(found)


def admissible_set(x) -> list:
    """A_x, via the recursion through LFP(x); checked against the definition in debug runs."""
    x = _open_slope(x)
    result = list(_admissible_recursive(x.numerator, x.denominator))
    if __debug__:
        assert result == admissible_direct(x), f"admissible routes disagree for {x}"
    return result


def psi_index(x, k: int) -> int:
    """k minus the number of elements of O_x[m, n-1] in [0, k]."""
    x = as_fraction(x)
    removed = set(orbit_segment(x, x.numerator, x.denominator - 1))
    return k - sum(1 for r in removed if r <= k)


def rationals_in(lo, hi, max_den: int, closed: bool = False) -> list:
    """Reduced rationals a/b with lo < a/b < hi (or <=) and b <= max_den, sorted."""
    lo, hi = as_fraction(lo), as_fraction(hi)
    out = set()
    for b in range(1, max_den + 1):
        for a in range(0, b + 1):
            if gcd(a, b) != 1:
                continue
            f = Fraction(a, b)
            if (lo <= f <= hi) if closed else (lo < f < hi):
                out.add(f)
    return sorted(out)
