"""Binary words, eventually periodic sequences and the unimodal order.

Finite words are plain strings over "01". Infinite sequences are
``EventuallyPeriodicSeq`` values, written ``pre(period)`` when serialized,
e.g. ``10(011)`` for 10011011011...
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import lcm

from .errors import FinitelyManyOnes, StartsWithZeroOrEleven

LESS, EQUAL, GREATER = -1, 0, 1


def check_word(w: str, allow_empty: bool = False) -> str:
    if not allow_empty and not w:
        raise ValueError("empty word")
    if set(w) - {"0", "1"}:
        raise ValueError(f"not a binary word: {w!r}")
    return w


def primitive_root(w: str) -> str:
    """Shortest u with w = u^k."""
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d]
    return w


@dataclass(frozen=True)
class EventuallyPeriodicSeq:
    """The infinite sequence ``pre`` followed by ``period`` repeated forever.

    Stored in canonical form (primitive period, shortest preperiod), so two
    values are equal exactly when the sequences are.
    """

    pre: str
    period: str

    def __post_init__(self):
        check_word(self.pre, allow_empty=True)
        check_word(self.period)
        pre, per = self.pre, primitive_root(self.period)
        while pre and pre[-1] == per[-1]:
            pre, per = pre[:-1], per[-1] + per[:-1]
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "period", per)

    @classmethod
    def periodic(cls, w: str) -> "EventuallyPeriodicSeq":
        return cls("", w)

    @classmethod
    def parse(cls, text: str) -> "EventuallyPeriodicSeq":
        """Read ``pre(period)``; a bare word means its infinite repetition."""
        text = text.strip()
        m = re.fullmatch(r"([01]*)\(([01]+)\)", text)
        if m:
            return cls(m.group(1), m.group(2))
        if re.fullmatch(r"[01]+", text):
            return cls.periodic(text)
        raise ValueError(f"cannot parse sequence {text!r}")

    def __str__(self):
        return f"{self.pre}({self.period})"

    def __getitem__(self, i: int) -> str:
        if i < len(self.pre):
            return self.pre[i]
        return self.period[(i - len(self.pre)) % len(self.period)]

    def prefix(self, n: int) -> str:
        return "".join(self[i] for i in range(n))

    def shift(self, k: int = 1) -> "EventuallyPeriodicSeq":
        """The shift map applied k times."""
        if k <= len(self.pre):
            return EventuallyPeriodicSeq(self.pre[k:], self.period)
        j = (k - len(self.pre)) % len(self.period)
        return EventuallyPeriodicSeq("", self.period[j:] + self.period[:j])

    def prepend(self, w: str) -> "EventuallyPeriodicSeq":
        return EventuallyPeriodicSeq(w + self.pre, self.period)

    @property
    def has_infinitely_many_ones(self) -> bool:
        return "1" in self.period

    def contains(self, word: str) -> bool:
        """Whether ``word`` occurs somewhere in the sequence."""
        span = len(self.pre) + len(self.period) + len(word)
        return word in self.prefix(span)


def _parity_compare(x_at, y_at, length):
    ones = 0
    for i in range(length):
        a, b = x_at(i), y_at(i)
        if a != b:
            natural = LESS if a < b else GREATER
            return natural if ones % 2 == 0 else -natural
        if a == "1":
            ones += 1
    return None


def unimodal_compare(x: EventuallyPeriodicSeq, y: EventuallyPeriodicSeq) -> int:
    """Compare two sequences in the unimodal (kneading) order.

    Returns -1, 0 or 1. At the first disagreement 0 < 1 if the common prefix
    holds an even number of 1s, and the comparison flips otherwise.
    """
    if x == y:
        return EQUAL
    horizon = max(len(x.pre), len(y.pre)) + lcm(len(x.period), len(y.period))
    result = _parity_compare(x.__getitem__, y.__getitem__, horizon)
    assert result is not None
    return result


def compare_words(u: str, v: str):
    """Unimodal comparison of finite words over their common length.

    Returns None when one word is a prefix of the other.
    """
    return _parity_compare(u.__getitem__, v.__getitem__, min(len(u), len(v)))


def seq_key(x: EventuallyPeriodicSeq):
    """Sort key realising the unimodal order."""
    from functools import cmp_to_key

    return cmp_to_key(unimodal_compare)(x)


def rotations(w: str):
    return [w[i:] + w[:i] for i in range(len(w))]


def is_maximal_code(w: str) -> bool:
    """True iff the repetition of w strictly exceeds each of its proper shifts."""
    check_word(w)
    top = EventuallyPeriodicSeq.periodic(w)
    for i in range(1, len(w)):
        if unimodal_compare(top, EventuallyPeriodicSeq.periodic(w[i:] + w[:i])) != GREATER:
            return False
    return True


def maximal_rotation(w: str) -> str:
    """The rotation of w whose repetition is largest in the unimodal order."""
    return max(rotations(w), key=lambda r: seq_key(EventuallyPeriodicSeq.periodic(r)))


@dataclass(frozen=True)
class BlockForm:
    """Run-length form 1 0^k1 1^m1 0^k2 1^m2 ... of a sequence.

    ``kappas``/``mus`` list the blocks up to the end of the first repetition
    of the periodic part; blocks from ``tail`` onward repeat forever.
    """

    kappas: tuple
    mus: tuple
    tail: int

    def block(self, i: int):
        """The i-th (0-based) block pair, following the periodic tail."""
        if i >= len(self.kappas):
            cyc = len(self.kappas) - self.tail
            i = self.tail + (i - self.tail) % cyc
        return self.kappas[i], self.mus[i]

    def reassemble(self) -> EventuallyPeriodicSeq:
        head = "1" + "".join("0" * k + "1" * m for k, m in zip(self.kappas[: self.tail], self.mus[: self.tail]))
        cyc = "".join("0" * k + "1" * m for k, m in zip(self.kappas[self.tail :], self.mus[self.tail :]))
        return EventuallyPeriodicSeq(head, cyc)


def block_decompose(c: EventuallyPeriodicSeq) -> BlockForm:
    """Split c = 1 0^k1 1^m1 0^k2 1^m2 ... with m_i in {1, 2}.

    A block has m_i = 1 only when zeros follow, so runs of 1s are cut into
    pairs with at most one trailing single 1.
    """
    if not c.has_infinitely_many_ones:
        raise FinitelyManyOnes(str(c))
    if c[0] == "0" or c[1] == "1":
        raise StartsWithZeroOrEleven(str(c))
    kappas, mus = [], []
    seen = {}
    i = 1
    while True:
        if i >= len(c.pre):
            key = (i - len(c.pre)) % len(c.period)
            if key in seen:
                return BlockForm(tuple(kappas), tuple(mus), seen[key])
            seen[key] = len(kappas)
        k = 0
        while c[i] == "0":
            k += 1
            i += 1
        if c[i + 1] == "1":
            mu = 2
        else:
            mu = 1
        i += mu
        kappas.append(k)
        mus.append(mu)
