"""Heights of binary sequences, the words c_q and w_q, and code parsing."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import FiniteOrderType, NotMaximal, OutOfRange
from .farey import HALF, as_fraction
from .symbolic import (
    EventuallyPeriodicSeq,
    block_decompose,
    check_word,
    is_maximal_code,
)

log = logging.getLogger(__name__)

STAR = "*"

# how many passes over the periodic block cycle before settling for the limit
LIMIT_CYCLES = 64

TERMINATED, SHORTCUT_HALF, LIMIT = "terminated", "shortcut_half", "limit"


@dataclass(frozen=True)
class HeightResult:
    value: Fraction
    mode: str


def _interval(r: int, kappa_sum: int):
    return Fraction(r, 2 * r + kappa_sum), Fraction(r, 2 * r - 1 + kappa_sum)


def height_of_sequence(c: EventuallyPeriodicSeq) -> HeightResult:
    """Nested-interval height of an infinite sequence with infinitely many 1s."""
    if not c.has_infinitely_many_ones:
        block_decompose(c)  # raises FinitelyManyOnes
    if c[0] == "0" or c[1] == "1":
        return HeightResult(HALF, SHORTCUT_HALF)
    form = block_decompose(c)
    cycle_len = len(form.kappas) - form.tail
    budget = len(form.kappas) + LIMIT_CYCLES * cycle_len
    kappa, mu = form.block(0)
    kappa_sum = kappa
    lo, hi = _interval(1, kappa_sum)
    for s in range(1, budget + 1):
        if mu == 1:
            return HeightResult(hi, TERMINATED)
        kappa, next_mu = form.block(s)
        kappa_sum += kappa
        nlo, nhi = _interval(s + 1, kappa_sum)
        if nhi <= lo:
            return HeightResult(lo, TERMINATED)
        if nlo >= hi:
            return HeightResult(hi, TERMINATED)
        lo, hi = max(lo, nlo), min(hi, nhi)
        mu = next_mu
    cyc_k = sum(form.kappas[form.tail:])
    value = Fraction(cycle_len, 2 * cycle_len + cyc_k)
    log.debug("height of %s taken as limit %s", c, value)
    return HeightResult(value, LIMIT)


def height(c) -> Fraction:
    if isinstance(c, str):
        c = EventuallyPeriodicSeq.parse(c)
    return height_of_sequence(c).value


def adjusted_code(code: str) -> str:
    """Change a final 1 to 0 when the repetition of the code avoids 010."""
    if not EventuallyPeriodicSeq.periodic(code).contains("010") and code.endswith("1"):
        return code[:-1] + "0"
    return code


def orbit_height(code: str) -> Fraction:
    """Height of the horseshoe orbit whose (maximal) code is given."""
    check_word(code)
    if not is_maximal_code(code):
        raise NotMaximal(code)
    return height_of_sequence(EventuallyPeriodicSeq.periodic(adjusted_code(code))).value


def _slope(q) -> Fraction:
    q = as_fraction(q)
    if not 0 < q <= HALF:
        raise OutOfRange(f"{q} is not in (0, 1/2]")
    return q


def prefix_kappas(q) -> list:
    q = _slope(q)
    m, n = q.numerator, q.denominator
    return [n // m - 1] + [(i * n) // m - ((i - 1) * n) // m - 2 for i in range(2, m + 1)]


def _prefix_from_kappas(q) -> str:
    kappas = prefix_kappas(q)
    return "1" + "11".join("0" * k for k in kappas) + "1"


def _prefix_from_line(q) -> str:
    # s_i = 1 iff the line from (0,0) to (n,m) meets y = j for some x in (i-1, i+1)
    m, n = q.numerator, q.denominator
    symbols = []
    for i in range(n + 1):
        # x = j*n/m lies strictly within (i-1, i+1)  <=>  (i-1)*m < j*n < (i+1)*m
        hit = any((i - 1) * m < j * n < (i + 1) * m for j in range(m + 1))
        symbols.append("1" if hit else "0")
    return "".join(symbols)


def prefix_word(q) -> str:
    """c_q, a word of length n+1 for q = m/n."""
    q = _slope(q)
    word = _prefix_from_kappas(q)
    other = _prefix_from_line(q)
    if word != other:
        raise AssertionError(f"c_{q} constructions disagree: {word} vs {other}")
    return word


def star_decoration(q) -> str:
    """w_q: c_q without its leading 10 and trailing 01; '*' for q = 1/2."""
    q = _slope(q)
    if q == HALF:
        return STAR
    return prefix_word(q)[2:-2]


@dataclass(frozen=True)
class ParsedCode:
    height: Fraction
    prefix: str
    decoration: str
    joints: tuple

    @property
    def star_flag(self) -> bool:
        return self.decoration == STAR

    def reassemble(self) -> str:
        if self.star_flag:
            return self.prefix + self.joints[0]
        return self.prefix + self.joints[0] + self.decoration + self.joints[1]


def parse_code(code: str) -> ParsedCode:
    """Split a maximal code into prefix c_q, joints and decoration."""
    q = orbit_height(code)
    n, length = q.denominator, len(code)
    if length == n:
        raise FiniteOrderType(f"{code} has period equal to the height denominator {n}")
    prefix = prefix_word(q)
    if not code.startswith(prefix) or length < n + 2:
        raise AssertionError(f"code {code} does not start with c_{q} = {prefix}")
    if length == n + 2:
        return ParsedCode(q, prefix, STAR, (code[n + 1],))
    return ParsedCode(q, prefix, code[n + 2 : length - 1], (code[n + 1], code[length - 1]))


def decoration_qw(w: str) -> Fraction:
    """q_w: the smallest height over the shifts of the repetition of 10w0."""
    if w == STAR:
        return HALF
    check_word(w, allow_empty=True)
    base = EventuallyPeriodicSeq.periodic("10" + w + "0")
    return min(height_of_sequence(base.shift(i)).value for i in range(len(w) + 3))


def _reduced_with_den(n: int):
    for m in range(1, n // 2 + 1):
        if gcd(m, n) == 1:
            yield Fraction(m, n)


def star_family_check(code: str):
    """Return (u/v, m/n) when code is c_{u/v} [] w_{m/n} [] (or c_{u/v} [] for 1/2), else None."""
    check_word(code)
    if not is_maximal_code(code):
        raise NotMaximal(code)
    length = len(code)
    for v in range(2, length - 1):
        n = length - v
        for low in _reduced_with_den(v):
            if not code.startswith(prefix_word(low)):
                continue
            for high in _reduced_with_den(n):
                if high <= low:
                    continue
                if n == 2 or code[v + 2 : length - 1] == star_decoration(high):
                    return low, high
    return None


def tweak_word(q, r: int) -> str:
    """The word 1 0^(k_r+1) 11 0^(k_{r+1}) ... 11 0^(k_m) 1 built from the kappas of c_q."""
    kappas = prefix_kappas(q)
    tail = [kappas[r - 1] + 1] + kappas[r:]
    return "1" + "11".join("0" * k for k in tail) + "1"


def height_bounds(q):
    """The two sequences bracketing every sequence of height q (0 < q < 1/2)."""
    w = star_decoration(q)
    lower = EventuallyPeriodicSeq.periodic("10" + w + "1")
    upper = EventuallyPeriodicSeq("10", w + "011")
    return lower, upper

