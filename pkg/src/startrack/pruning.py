"""Star tree endomorphisms and the glue / pull-tight rewrite system.

An endomorphism of a star is a cyclic order on its edges together with the
image word of each edge. Every edge is oriented from its outer end to the
central vertex v; a letter (e, +1) crosses e towards v and (e, -1) crosses
it away from v.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NoInnermostBacktracking, NoSuchBacktracking, OutOfRange, WrongForm
from .farey import HALF, as_fraction, left_child, right_child


@dataclass(frozen=True)
class TreeEndo:
    cyclic_order: tuple
    images: dict = field(hash=False)

    @property
    def edge_count(self) -> int:
        return len(self.cyclic_order)

    def image(self, e) -> tuple:
        return self.images[e]

    def listing(self) -> str:
        return "\n".join(f"e_{e} -> {word_text(self.images[e])}" for e in self.cyclic_order)


def word_text(word) -> str:
    return " ".join(f"e{e}" if sign > 0 else f"E{e}" for e, sign in word)


def _make(order, images) -> TreeEndo:
    return TreeEndo(tuple(order), {e: tuple(images[e]) for e in order})


def _slope(q, closed: bool) -> Fraction:
    q = as_fraction(q)
    if not (0 < q <= HALF if closed else 0 < q < HALF):
        raise OutOfRange(f"{q} is outside the allowed range")
    return q


def f_endo(q) -> TreeEndo:
    q = _slope(q, closed=True)
    m, n = q.numerator, q.denominator
    images = {0: [(0, 1)] + [(j, sign) for j in range(1, m + 1) for sign in (-1, 1)]}
    for r in range(1, n):
        images[r] = [((r + m) % n, 1)]
    return _make(range(n), images)


def g_endo(q) -> TreeEndo:
    q = _slope(q, closed=False)
    m, n = q.numerator, q.denominator
    base = f_endo(q)
    images = dict(base.images)
    images[n - 1] = ((m - 1, 1), (m, -1), (m, 1))
    return _make(range(n), images)


# rewrite steps ------------------------------------------------------------------


@dataclass(frozen=True)
class Glue:
    edge: int
    new_edge: int
    after: bool

    def __str__(self):
        side = "after" if self.after else "before"
        return f"Glue {self.edge} (new edge {self.new_edge}, {side} {self.edge})"


@dataclass(frozen=True)
class PullTight:
    edge: int
    over: int
    position: int

    def __str__(self):
        return f"Pull Tight {self.edge} over {self.over} at {self.position}"


@dataclass(frozen=True)
class Relabel:
    mapping: tuple

    def __str__(self):
        return "Relabel " + ", ".join(f"{a}->{b}" for a, b in self.mapping)


@dataclass
class RewriteTrace:
    steps: list = field(default_factory=list)
    summary: list = field(default_factory=list)

    def lines(self) -> list:
        return [str(step) for step in self.steps]


def _cyclically_monotone(order, images) -> bool:
    """The germ map at v (edge to the edge its image arrives along) wraps around at most once."""
    pos = {e: i for i, e in enumerate(order)}
    size = len(order)
    seq = [pos[images[e][-1][0]] for e in order]
    drops = sum(1 for i in range(size) if seq[(i + 1) % size] < seq[i])
    return drops <= 1


def _substitute(word, r: int, new: int):
    out = []
    for e, sign in word:
        if e != r:
            out.append((e, sign))
        elif sign > 0:
            out += [(r, 1), (new, -1), (new, 1)]
        else:
            out += [(new, -1), (new, 1), (r, -1)]
    return out


def glue_step(t: TreeEndo, r: int):
    """Glue e_r along the trailing backtracking of its image; returns (endo, step)."""
    word = list(t.images[r])
    if len(word) < 3 or word[-2][0] != word[-1][0] or word[-2][1] != -1 or word[-1][1] != 1:
        raise NoInnermostBacktracking(f"image of e_{r} does not end with a backtracking")
    s = word[-1][0]
    new = max(t.cyclic_order) + 1
    images = {e: list(w) for e, w in t.images.items()}
    images[r] = word[:-2]
    images[new] = [(s, 1)]
    images = {e: _substitute(w, r, new) for e, w in images.items()}
    idx = t.cyclic_order.index(r)
    after = list(t.cyclic_order[: idx + 1]) + [new] + list(t.cyclic_order[idx + 1 :])
    before = list(t.cyclic_order[:idx]) + [new] + list(t.cyclic_order[idx:])
    if _cyclically_monotone(after, images):
        order, placed_after = after, True
    elif _cyclically_monotone(before, images):
        order, placed_after = before, False
    else:
        raise AssertionError(f"no monotone position for the edge glued from e_{r}")
    return _make(order, images), Glue(r, new, placed_after)


def glue(t: TreeEndo, r: int) -> TreeEndo:
    return glue_step(t, r)[0]


def _backtrack_positions(word, s: int) -> list:
    return [i for i in range(len(word) - 1) if word[i] == (s, -1) and word[i + 1] == (s, 1)]


def pull_tight(t: TreeEndo, r: int, s: int, position: int | None = None) -> TreeEndo:
    """Delete one backtracking E_s e_s from the image of e_r (the last one by default)."""
    word = list(t.images[r])
    spots = _backtrack_positions(word, s)
    if not spots:
        raise NoSuchBacktracking(f"image of e_{r} has no backtracking over e_{s}")
    if position is None:
        position = spots[-1]
    if position not in spots:
        raise NoSuchBacktracking(f"no backtracking over e_{s} at position {position}")
    images = dict(t.images)
    images[r] = tuple(word[:position] + word[position + 2 :])
    return _make(t.cyclic_order, images)


def _visits_in_cyclic_order(order, word) -> bool:
    pos = {e: i for i, e in enumerate(order)}
    seq = [pos[e] for e, _ in word]
    return all(a <= b for a, b in zip(seq, seq[1:]))


def _tighten_band(t: TreeEndo, new: int, trace: RewriteTrace) -> TreeEndo:
    """Pull tight the image of the band edge over the newly glued edge."""
    band = t.cyclic_order[0]
    word = list(t.images[band])
    for pos in _backtrack_positions(word, new):
        trial = word[:pos] + word[pos + 2 :]
        if _visits_in_cyclic_order(t.cyclic_order, trial):
            trace.steps.append(PullTight(band, new, pos))
            return pull_tight(t, band, new, pos)
    raise NoSuchBacktracking(f"no pull tight of e_{band} over e_{new} keeps the cyclic order")


# normal forms -------------------------------------------------------------------


def _band_edge(t: TreeEndo):
    """The edge whose image starts with itself and is longest."""
    candidates = [e for e in t.cyclic_order if t.images[e][0] == (e, 1)]
    return max(candidates, key=lambda e: len(t.images[e]))


def normalize_step(t: TreeEndo):
    """Relabel so that the band edge is e_0 and edges are numbered in cyclic order."""
    band = _band_edge(t)
    idx = t.cyclic_order.index(band)
    rotated = t.cyclic_order[idx:] + t.cyclic_order[:idx]
    mapping = {old: new for new, old in enumerate(rotated)}
    images = {mapping[e]: [(mapping[x], sign) for x, sign in t.images[e]] for e in t.cyclic_order}
    step = Relabel(tuple(sorted(mapping.items())))
    return _make(range(len(rotated)), images), step


def normalize(t: TreeEndo) -> TreeEndo:
    return normalize_step(t)[0]


def endo_equivalent(a: TreeEndo, b: TreeEndo) -> bool:
    """True when a rotation of labels respecting the cyclic orders identifies the images."""
    if a.edge_count != b.edge_count:
        return False
    size = a.edge_count
    for shift in range(size):
        mapping = {a.cyclic_order[i]: b.cyclic_order[(i + shift) % size] for i in range(size)}
        if all(
            [(mapping[x], sign) for x, sign in a.images[e]] == list(b.images[mapping[e]]) for e in a.cyclic_order
        ):
            return True
    return False


def _form_slope(t: TreeEndo) -> Fraction:
    n = t.edge_count
    m = (len(t.images[t.cyclic_order[0]]) - 1) // 2
    return Fraction(m, n)


# procedures -------------------------------------------------------------------


def procedure_L(t: TreeEndo, trace: RewriteTrace | None = None) -> TreeEndo:
    """From f_{m/n} to g of the left Farey child of m/n."""
    trace = trace if trace is not None else RewriteTrace()
    t = normalize(t)
    q = _form_slope(t)
    if not endo_equivalent(t, f_endo(q)):
        raise WrongForm("procedure L needs the f form")
    m = q.numerator
    for j in _glue_order_L(q):
        t, step = glue_step(t, j)
        trace.steps.append(step)
        if 1 <= j <= m - 1:
            t = _tighten_band(t, step.new_edge, trace)
    t, step = normalize_step(t)
    trace.steps.append(step)
    trace.summary.append("L")
    return t


def _glue_order_L(q) -> list:
    m, n = q.numerator, q.denominator
    order, j = [], 0
    while True:
        order.append(j)
        if j == m - 1:
            return order
        j = (j - m) % n


def _glue_order_R(q) -> list:
    m, n = q.numerator, q.denominator
    order, j = [], n - 1
    while True:
        order.append(j)
        if j == m:
            return order
        j = (j - m) % n


def procedure_R(t: TreeEndo, trace: RewriteTrace | None = None) -> TreeEndo:
    """From g_{m/n} to g of the right Farey child of m/n."""
    trace = trace if trace is not None else RewriteTrace()
    t = normalize(t)
    q = _form_slope(t)
    if not (q < HALF and endo_equivalent(t, g_endo(q))):
        raise WrongForm("procedure R needs the g form")
    m = q.numerator
    for j in _glue_order_R(q):
        t, step = glue_step(t, j)
        trace.steps.append(step)
        # the band edge keeps its last backtracking here, so e_m is tightened too
        if 1 <= j <= m:
            t = _tighten_band(t, step.new_edge, trace)
    t, step = normalize_step(t)
    trace.steps.append(step)
    trace.summary.append("R")
    return t


def tighten_g(t: TreeEndo, trace: RewriteTrace | None = None) -> TreeEndo:
    """g_{m/n} to f_{m/n}: pull tight e_{n-1} over e_m."""
    trace = trace if trace is not None else RewriteTrace()
    t = normalize(t)
    q = _form_slope(t)
    if not (q < HALF and endo_equivalent(t, g_endo(q))):
        raise WrongForm("pulling tight to the f form needs the g form")
    m, n = q.numerator, q.denominator
    pos = _backtrack_positions(list(t.images[n - 1]), m)[-1]
    trace.steps.append(PullTight(n - 1, m, pos))
    trace.summary.append("tight")
    return pull_tight(t, n - 1, m, pos)


def farey_path(q) -> list:
    """The L/R moves from 1/2 down to q through immediate children."""
    q = _slope(q, closed=True)
    moves, current = [], HALF
    while current != q:
        if q < current:
            current = left_child(current)
            moves.append(("L", current))
        else:
            current = right_child(current)
            moves.append(("R", current))
        if current.denominator > q.denominator:
            raise AssertionError(f"overshot {q} on the way to it")
    return moves


def construct_from_horseshoe(q):
    """Build f_q from f_{1/2} by Procedures L and R; returns (endo, trace)."""
    q = _slope(q, closed=True)
    trace = RewriteTrace()
    t = f_endo(HALF)
    in_g_form = False
    for move, _ in farey_path(q):
        if move == "L":
            if in_g_form:
                t = tighten_g(t, trace)
            t = procedure_L(t, trace)
        else:
            if not in_g_form:
                raise WrongForm("procedure R reached from an f form")
            t = procedure_R(t, trace)
        in_g_form = True
    if in_g_form:
        t = tighten_g(t, trace)
    return t, trace


def replay(start: TreeEndo, trace: RewriteTrace) -> TreeEndo:
    """Apply the recorded steps to start."""
    t = start
    for step in trace.steps:
        if isinstance(step, Glue):
            t, done = glue_step(t, step.edge)
            assert done == step, f"replayed {done} differs from {step}"
        elif isinstance(step, PullTight):
            t = pull_tight(t, step.edge, step.over, step.position)
        else:
            mapping = dict(step.mapping)
            order = sorted(mapping.values())
            images = {mapping[e]: [(mapping[x], sign) for x, sign in t.images[e]] for e in t.cyclic_order}
            t = _make(order, images)
    return t


__all__ = [
    "TreeEndo",
    "f_endo",
    "g_endo",
    "glue",
    "pull_tight",
    "procedure_L",
    "procedure_R",
    "tighten_g",
    "construct_from_horseshoe",
    "endo_equivalent",
    "normalize",
    "replay",
    "farey_path",
]
