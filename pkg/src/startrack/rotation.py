"""Rotation numbers and rotation intervals of horseshoe and star orbits."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from .errors import NonIntervalUnion, NotMaximal, NotStronglyConnected
from .height import height_of_sequence
from .starorbit import StarData, require_legal, star_rotation_number
from .symbolic import EventuallyPeriodicSeq, check_word, is_maximal_code

log = logging.getLogger(__name__)

__all__ = [
    "RotationInterval",
    "MarkedGraph",
    "rotation_interval_of_code",
    "block_intervals",
    "star_rotation_number",
    "markov_graph",
    "cycle_ratio_interval",
    "markov_rotation_interval",
]


@dataclass(frozen=True)
class RotationInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def trivial(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def __str__(self):
        return f"{{{self.lo}}}" if self.trivial else f"[{self.lo}, {self.hi}]"


def _union_interval(pieces, error_cls, context: str) -> RotationInterval:
    """Merge closed intervals; raise when they do not form a single interval."""
    pieces = sorted(pieces)
    lo, hi = pieces[0]
    for a, b in pieces[1:]:
        if a > hi:
            raise error_cls(f"{context}: gap between {hi} and {a} in {pieces}")
        hi = max(hi, b)
    return RotationInterval(lo, hi)


# symbolic algorithm on codes -------------------------------------------------


def _blocks(code: str):
    """Rotate the code to start a 0-block after a 1 and return its (kappa, mu) runs."""
    size = len(code)
    start = next(i for i in range(size) if code[i] == "0" and code[i - 1] == "1")
    word = code[start:] + code[:start]
    runs, i = [], 0
    while i < size:
        j = i
        while j < size and word[j] == "0":
            j += 1
        k = j
        while k < size and word[k] == "1":
            k += 1
        runs.append((j - i, k - j))
        i = k
    return runs


def _run_word(runs) -> str:
    return "".join("0" * kappa + "1" * mu for kappa, mu in runs)


def _q(seq: EventuallyPeriodicSeq) -> Fraction:
    return height_of_sequence(seq).value


def block_intervals(code: str) -> list:
    """The pairs (xi_i, eta_i), one per block of 0s in the code."""
    runs = _blocks(code)
    r = len(runs)
    out = []
    for i in range(r):
        rotated = runs[i:] + runs[:i]
        forward = EventuallyPeriodicSeq("1", _run_word(rotated))
        xi = _q(forward)
        backward = _run_word(rotated)[::-1]
        mu_prev = runs[i - 1][1]
        if mu_prev == 1:
            eta_seq = EventuallyPeriodicSeq.periodic(backward)
        else:
            # the backward word starts 11: its second symbol becomes 0
            tail = backward[mu_prev:] + "11"
            eta_seq = EventuallyPeriodicSeq("10", "1" * (mu_prev - 2) + tail)
            literal = EventuallyPeriodicSeq.periodic(backward)
            assert eta_seq == _replace_second(literal)
        out.append((xi, _q(eta_seq)))
    return out


def _replace_second(seq: EventuallyPeriodicSeq) -> EventuallyPeriodicSeq:
    shifted = seq.shift(2)
    return shifted.prepend(seq[0] + "0")


def rotation_interval_of_code(code: str) -> RotationInterval:
    """Rotation interval of the horseshoe orbit with the given maximal code."""
    check_word(code)
    if not is_maximal_code(code):
        raise NotMaximal(code)
    if len(code) < 2:
        raise NotMaximal(f"{code}: period must exceed 1")
    pieces = [(xi, eta) for xi, eta in block_intervals(code) if eta >= xi]
    return _union_interval(pieces, NonIntervalUnion, code)


# Markov graph on star data ----------------------------------------------------


@dataclass(frozen=True)
class MarkedGraph:
    """Directed graph with a 0/1 mark on every vertex."""

    vertices: tuple
    successors: dict
    marks: dict

    def to_dot(self) -> str:
        lines = ["digraph markov {"]
        for v in self.vertices:
            shape = "doublecircle" if self.marks[v] else "circle"
            lines.append(f'  "{_vname(v)}" [label="<{v[0]},{v[1]}>", shape={shape}];')
        for v in self.vertices:
            for w in sorted(self.successors[v]):
                lines.append(f'  "{_vname(v)}" -> "{_vname(w)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _vname(v) -> str:
    return f"{v[0]}.{v[1]}"


def markov_graph(d: StarData) -> MarkedGraph:
    """Transitions between main-edge intervals of the truncated star map."""
    from .traintrack import MAIN, build_bh_graph

    require_legal(d)
    g = build_bh_graph(d)
    succ = {e: sorted({lab for kind, lab, _ in word if kind == MAIN}) for e, word in g.main_images.items()}
    marks = {e: 1 if e[0] >= d.n - d.m else 0 for e in d.labels}
    return MarkedGraph(tuple(d.labels), succ, marks)


def _sccs(vertices, succ) -> list:
    """Tarjan's algorithm, iterative."""
    index, low, on_stack, stack, comps = {}, {}, set(), [], []
    counter = 0
    for root in vertices:
        if root in index:
            continue
        work = [(root, iter(succ[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ[w])))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                low[work[-1][0]] = min(low[work[-1][0]], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps


def _min_cycle_mean(comp, succ, weight) -> Fraction:
    """Karp's minimum mean cycle on a strongly connected vertex set, exactly."""
    members = set(comp)
    size = len(comp)
    source = comp[0]
    inf = None
    table = [{v: inf for v in comp} for _ in range(size + 1)]
    table[0][source] = 0
    for k in range(1, size + 1):
        prev, cur = table[k - 1], table[k]
        for u in comp:
            if prev[u] is None:
                continue
            for v in succ[u]:
                if v in members:
                    cand = prev[u] + weight[u]
                    if cur[v] is None or cand < cur[v]:
                        cur[v] = cand
    best = None
    for v in comp:
        if table[size][v] is None:
            continue
        worst = max(
            Fraction(table[size][v] - table[k][v], size - k) for k in range(size) if table[k][v] is not None
        )
        if best is None or worst < best:
            best = worst
    return best


def cycle_ratio_interval(graph: MarkedGraph) -> RotationInterval:
    """[min, max] of marked vertices per step over all cycles of the graph."""
    succ = graph.successors
    pieces = []
    for comp in _sccs(list(graph.vertices), succ):
        if len(comp) == 1 and comp[0] not in succ[comp[0]]:
            continue
        low = _min_cycle_mean(comp, succ, graph.marks)
        neg = {v: -graph.marks[v] for v in comp}
        high = -_min_cycle_mean(comp, succ, neg)
        pieces.append((low, high))
    if not pieces:
        raise NotStronglyConnected("graph has no cycles")
    if len(pieces) > 1:
        log.info("Markov graph has %d recurrent components", len(pieces))
    return _union_interval(pieces, NotStronglyConnected, "Markov graph components")


def markov_rotation_interval(d: StarData) -> RotationInterval:
    return cycle_ratio_interval(markov_graph(d))
