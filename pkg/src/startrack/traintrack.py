"""Bestvina-Handel star graphs of star orbits: images, absorption, efficiency, growth.

Geometry. The main edge e_{r,s} runs along star edge e_r from the orbit point
(r, s) to (r, s+1), or to the central vertex v when s is the last index. Every
orbit point y carries a peripheral loop p_y. For a non-endpoint label the
loop hangs on side L or R of the star edge (sides are fixed relative to the
outer-to-v orientation of the edge).

The image of a main edge is read by walking along the strands of the star
map. Each star edge carries up to three parallel strands, ordered in
columns: the outward strand of the e_0 band, the straight strand coming
from e_{j-m}, then the inward strand of the e_0 band. An arc passing an
orbit point that lies in another column either runs past the loop or has to
go around it, depending on the column order and the point's side.

Tokens are tuples (kind, label, sign) with kind "e" (main) or "p"
(peripheral) and sign +1/-1 for the traversal direction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import NotAbsorbed, NotEfficient
from .starorbit import StarData, require_legal, side_partition

LEFT, RIGHT = "L", "R"
MAIN, PERIPHERAL = "e", "p"

# column of each strand kind on a star edge, smaller columns lie further left
_OUT, _STRAIGHT, _IN = "out", "straight", "in"


def _column(m: int, j: int, kind: str) -> int:
    if j == 0:
        return {_STRAIGHT: 0, _IN: 1}[kind]
    if j < m:
        return {_OUT: 0, _STRAIGHT: 1, _IN: 2}[kind]
    if j == m:
        return {_OUT: 0, _IN: 1}[kind]
    return 0


def token_str(tok) -> str:
    kind, (r, s), sign = tok
    name = f"{kind}{r}.{s}"
    return name if sign > 0 else name.upper()


def word_str(word) -> str:
    return " ".join(token_str(t) for t in word)


def _inverse(word):
    return [(k, lab, -sgn) for k, lab, sgn in reversed(word)]


@dataclass(frozen=True)
class BHGraph:
    """A Bestvina-Handel star graph with the images of all its edges."""

    data: StarData
    sides: dict
    main_images: dict
    peripheral_perm: dict

    @cached_property
    def main_edges(self) -> list:
        return list(self.data.labels)

    def peripheral_image(self, label):
        return [(PERIPHERAL, self.peripheral_perm[label], 1)]

    def top_labels(self) -> set:
        return {(r, self.data.counts[r] - 1) for r in range(self.data.n)}


class _Walker:
    """Emits the token word of an arc travelling along strands of the star."""

    def __init__(self, d: StarData, sides: dict):
        self.d, self.sides = d, sides
        self.m, self.n, self.N = d.m, d.n, d.counts
        pi_inv = d.inverse
        # strand kind holding each orbit point, from its preimage
        self.kind = {}
        for y in d.labels:
            x = pi_inv[y]
            if x[0] != 0:
                self.kind[y] = _STRAIGHT
            elif x[1] in d.A:
                self.kind[y] = _OUT
            else:
                self.kind[y] = _IN

    def _pass(self, out: list, j: int, lvl: int, col: int, inward: bool):
        y = (j, lvl)
        y_col = _column(self.m, j, self.kind[y])
        if y_col == col:
            return
        arc_side = LEFT if col < y_col else RIGHT
        if arc_side != self.sides[y]:
            sign = 1 if (inward and arc_side == RIGHT) or (not inward and arc_side == LEFT) else -1
            out.append((PERIPHERAL, y, sign))

    def move(self, out: list, j: int, col: int, a: int, b: int):
        """Travel along e_j in column col from level a to level b (level N_j is v)."""
        if b >= a:
            for lvl in range(a, b):
                out.append((MAIN, (j, lvl), 1))
                if lvl + 1 < b:
                    self._pass(out, j, lvl + 1, col, True)
        else:
            for lvl in range(a - 1, b - 1, -1):
                out.append((MAIN, (j, lvl), -1))
                if lvl > b:
                    self._pass(out, j, lvl, col, False)

    # the e_0 band: strand 0 is the initial segment on e_0, then
    # strand 2j-1 runs out along e_j and strand 2j runs back in
    def band_walk(self, start, end) -> list:
        (sa, la), (sb, lb) = start, end
        assert sa <= sb
        out = []
        for i in range(sa, sb + 1):
            j = (i + 1) // 2
            inward = i % 2 == 0
            if i == sa:
                a = la
            else:
                a = 0 if inward else self.N[j]
            if i == sb:
                b = lb
            else:
                b = self.N[j] if inward else 0
            col = _column(self.m, j, _IN if inward else _OUT)
            self.move(out, j, col, a, b)
            if i < sb and not inward:
                out.append((PERIPHERAL, (j, 0), 1))
        return out

    def band_position(self, s: int, as_end: bool):
        d = self.d
        j, lvl = d.perm[(0, s)]
        if s in d.A:
            return 2 * j - 1, lvl
        if s in d.C:
            return (2 * j - 1, 0) if as_end else (2 * j, 0)
        return 2 * j, lvl


def default_sides(d: StarData) -> dict:
    """The (beta, alpha) assignment: beta on the left, alpha on the right."""
    parts = side_partition(d)
    sides = {x: LEFT for x in parts.beta}
    sides.update({x: RIGHT for x in parts.alpha})
    return sides


def _flip(side: str) -> str:
    return RIGHT if side == LEFT else LEFT


def build_bh_graph(d: StarData, sides: dict | None = None) -> BHGraph:
    """The star graph of d with side assignment ``sides`` (defaults to beta=L, alpha=R)."""
    require_legal(d)
    if sides is None:
        sides = default_sides(d)
    sides = dict(sides)
    walker = _Walker(d, sides)
    pi, m, N = d.perm, d.m, d.counts
    images = {}
    for r, s in d.labels:
        last = s == N[r] - 1
        if r != 0:
            j = (r + m) % d.n
            col = _column(m, j, _STRAIGHT)
            a = pi[(r, s)][1]
            b = N[j] if last else pi[(r, s + 1)][1]
            word = []
            walker.move(word, j, col, a, b)
        else:
            start = walker.band_position(s, as_end=False)
            end = (2 * m, N[m]) if last else walker.band_position(s + 1, as_end=True)
            word = walker.band_walk(start, end)
        x = (r, s)
        # side mismatch where the image leaves pi(x)
        if x in sides and pi[x] in sides:
            side = _flip(sides[x]) if r == 0 and s in d.A else sides[x]
            if side != sides[pi[x]]:
                word.insert(0, (PERIPHERAL, pi[x], 1))
        if not last:
            y = (r, s + 1)
            if pi[y] in sides:
                side = _flip(sides[y]) if r == 0 and s + 1 in d.A else sides[y]
                if side != sides[pi[y]]:
                    word.append((PERIPHERAL, pi[y], -1))
        images[x] = word
    c = d.c_index
    fold = (0, c)
    if fold in sides and sides[fold] == RIGHT:
        images[fold].insert(0, (PERIPHERAL, (m, 0), 1))
        images[(0, c - 1)].append((PERIPHERAL, (m, 0), -1))
    return BHGraph(d, sides, {k: tuple(v) for k, v in images.items()}, dict(pi))


def check_absorbed(g: BHGraph) -> bool:
    return all(word and word[0][0] == MAIN and word[-1][0] == MAIN for word in g.main_images.values())


@dataclass(frozen=True)
class Efficiency:
    ok: bool
    edge: tuple | None = None
    witness: tuple = ()

    def __bool__(self):
        return self.ok


def _is_t_pair(g: BHGraph, first, second) -> bool:
    tops = g.top_labels()
    return (
        first[0] == MAIN
        and second[0] == MAIN
        and first[2] == 1
        and second[2] == -1
        and first[1] in tops
        and second[1] in tops
        and first[1] != second[1]
    )


def check_efficient(g: BHGraph) -> Efficiency:
    """Test that each main image reads m p m p ... m, a pair of mains being allowed only across v."""
    if not check_absorbed(g):
        raise NotAbsorbed("efficiency is only defined for absorbed graphs")
    for edge in g.main_edges:
        word = g.main_images[edge]
        for first, second in zip(word, word[1:]):
            if first[0] == PERIPHERAL and second[0] == PERIPHERAL:
                return Efficiency(False, edge, (first, second))
            if first[0] == MAIN and second[0] == MAIN and not _is_t_pair(g, first, second):
                return Efficiency(False, edge, (first, second))
    return Efficiency(True)


def iterate_word(g: BHGraph, word, steps: int, cap: int = 200_000):
    """Apply the graph map ``steps`` times to a token word, stopping early past ``cap`` tokens."""
    word = list(word)
    for _ in range(steps):
        nxt = []
        for kind, label, sign in word:
            img = list(g.main_images[label]) if kind == MAIN else g.peripheral_image(label)
            nxt += img if sign > 0 else _inverse(img)
        word = nxt
        if len(word) > cap:
            break
    return word


def backtracking_free(g: BHGraph, steps: int | None = None) -> bool:
    """Bounded-iteration check: no iterate of a main edge contains x followed by its inverse."""
    if steps is None:
        steps = g.data.period - g.data.n
    for edge in g.main_edges:
        word = iterate_word(g, [(MAIN, edge, 1)], steps)
        for a, b in zip(word, word[1:]):
            if a[0] == b[0] and a[1] == b[1] and a[2] == -b[2]:
                return False
    return True


def has_star_train_track(d: StarData) -> bool:
    g = build_bh_graph(d)
    return check_absorbed(g) and bool(check_efficient(g))


def transition_matrix(g: BHGraph) -> np.ndarray:
    index = {e: i for i, e in enumerate(g.main_edges)}
    size = len(index)
    mat = np.zeros((size, size), dtype=np.int64)
    for edge, word in g.main_images.items():
        for kind, label, _ in word:
            if kind == MAIN:
                mat[index[edge], index[label]] += 1
    return mat


def is_irreducible(mat: np.ndarray) -> bool:
    size = mat.shape[0]
    reach = (mat > 0).astype(np.int64) + np.eye(size, dtype=np.int64)
    # repeated squaring of the reachability relation
    for _ in range(max(1, size.bit_length())):
        reach = ((reach @ reach) > 0).astype(np.int64)
    return bool(reach.all())


@dataclass(frozen=True)
class Growth:
    matrix: np.ndarray
    radius: float
    irreducible: bool


def growth_rate(g: BHGraph) -> Growth:
    """Transition matrix of the main edges and its spectral radius."""
    if not check_absorbed(g) or not check_efficient(g):
        raise NotEfficient("growth rate needs an efficient graph")
    mat = transition_matrix(g)
    radius = float(max(abs(np.linalg.eigvals(mat.astype(float)))))
    return Growth(mat, radius, is_irreducible(mat))


def to_dot(g: BHGraph) -> str:
    """DOT rendering: main edges e_{r,s} in a chain per star edge, peripheral loops as self-loops."""
    d = g.data
    lines = ["digraph bh {", '  v [label="v", shape=point];']
    for label in d.labels:
        r, s = label
        port = {LEFT: "w", RIGHT: "e"}.get(g.sides.get(label), "s")
        lines.append(f'  "x{r}.{s}" [label="({r},{s})"];')
        lines.append(f'  "x{r}.{s}" -> "x{r}.{s}" [label="p{r}.{s}", tailport={port}, headport={port}];')
    for r, s in d.labels:
        head = "v" if s == d.counts[r] - 1 else f'"x{r}.{s + 1}"'
        image = word_str(g.main_images[(r, s)])
        lines.append(f'  "x{r}.{s}" -> {head} [label="e{r}.{s}", tooltip="{image}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def all_side_assignments(d: StarData):
    """Every L/R assignment on the non-endpoint labels."""
    inner = [x for x in d.labels if x[1] > 0]
    for choice in itertools.product((LEFT, RIGHT), repeat=len(inner)):
        yield dict(zip(inner, choice))
