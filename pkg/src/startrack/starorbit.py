"""Periodic orbits of the star maps f_{m/n}, described by their combinatorial data.

A label (r, s) names the s-th orbit point on edge e_r, counted from the
outer end of the edge (s = 0 is outermost). The data of an orbit is the
tuple of counts N_r, the cyclic permutation on labels induced by the map,
and the split of the points on e_0 into A (orientation reversed), B
(orientation preserved) and C (the single fold point).
"""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd

from .errors import BadIndex, HalfSlope, IllegalData, IllegalInput, NotCoprime, NotMaximal, OutOfRange
from .farey import HALF, admissible_set, as_fraction, orbit_segment
from .symbolic import EventuallyPeriodicSeq, is_maximal_code, seq_key

TYPE_A, TYPE_B = "A", "B"


@dataclass(frozen=True)
class StarData:
    """The data ((N_r), pi, (A, B, C)) of an orbit of f_{m/n}.

    ``cycle`` lists every label once, in the order visited starting at (0, 0).
    """

    m: int
    n: int
    counts: tuple
    cycle: tuple
    A: tuple
    B: tuple
    C: tuple

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(self.counts))
        object.__setattr__(self, "cycle", tuple(tuple(x) for x in self.cycle))
        for name in "ABC":
            object.__setattr__(self, name, tuple(sorted(getattr(self, name))))

    @classmethod
    def from_perm(cls, m, n, counts, perm, A, B, C) -> "StarData":
        """Build from a permutation dict; raises IllegalData unless it is one cycle."""
        total = sum(counts)
        cycle = [(0, 0)]
        while len(cycle) <= total:
            nxt = perm[cycle[-1]]
            if nxt == (0, 0):
                break
            cycle.append(nxt)
        if len(cycle) != total:
            raise IllegalData("permutation is not a single cycle")
        return cls(m, n, counts, cycle, A, B, C)

    @property
    def slope(self) -> Fraction:
        return Fraction(self.m, self.n)

    @property
    def period(self) -> int:
        return len(self.cycle)

    @cached_property
    def perm(self) -> dict:
        cyc = self.cycle
        return {cyc[i]: cyc[(i + 1) % len(cyc)] for i in range(len(cyc))}

    @cached_property
    def inverse(self) -> dict:
        return {b: a for a, b in self.perm.items()}

    @cached_property
    def labels(self) -> list:
        return [(r, s) for r in range(self.n) for s in range(self.counts[r])]

    @property
    def k(self) -> int:
        return self.perm[(0, 0)][0]

    @property
    def gamma(self) -> str:
        return TYPE_A if 0 in self.A else TYPE_B

    @property
    def c_index(self) -> int:
        return self.C[0]

    def e0_type(self, s: int) -> str:
        if s in self.A:
            return "A"
        if s in self.B:
            return "B"
        return "C"

    def is_endpoint(self, label) -> bool:
        return label[1] == 0

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "N": list(self.counts),
            "cycle": [list(x) for x in self.cycle],
            "A": list(self.A),
            "B": list(self.B),
            "C": list(self.C),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, obj) -> "StarData":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            data = cls(
                obj["m"], obj["n"], obj["N"], [tuple(x) for x in obj["cycle"]], obj["A"], obj["B"], obj["C"]
            )
        except (KeyError, TypeError) as exc:
            raise IllegalData(f"malformed data: {exc}") from exc
        check_structure(data)
        return data

    def plain(self) -> str:
        """Cycle notation with A/B/C tags on the labels of e_0."""
        parts = []
        for r, s in self.cycle:
            tag = f":{self.e0_type(s)}" if r == 0 else ""
            parts.append(f"({r},{s}){tag}")
        return " -> ".join(parts)

    def sort_key(self):
        return (self.period, self.dumps())


def check_structure(d: StarData) -> None:
    """Raise IllegalData unless d is a well-formed element of D_n."""
    if not (d.n >= 2 and 0 < d.m and gcd(d.m, d.n) == 1 and 2 * d.m <= d.n):
        raise IllegalData(f"bad slope {d.m}/{d.n}")
    if len(d.counts) != d.n or any(c < 1 for c in d.counts):
        raise IllegalData("counts must be n positive integers")
    if sorted(d.cycle) != sorted(d.labels) or len(set(d.cycle)) != len(d.cycle):
        raise IllegalData("cycle must visit every label exactly once")
    if not d.cycle or d.cycle[0] != (0, 0):
        raise IllegalData("cycle must start at (0,0)")
    parts = list(d.A) + list(d.B) + list(d.C)
    if sorted(parts) != list(range(d.counts[0])):
        raise IllegalData("A, B, C must partition the points of e_0")
    if len(d.C) != 1:
        raise IllegalData("C must have exactly one element")


@dataclass(frozen=True)
class Report:
    ok: bool
    clause: str = ""
    detail: str = ""

    def __bool__(self):
        return self.ok


def _fail(clause, detail=""):
    return Report(False, clause, detail)


def validate_data(d: StarData, k: int | None = None, gamma: str | None = None) -> Report:
    """Check the legality conditions for the class (m/n, k, gamma)."""
    try:
        check_structure(d)
    except IllegalData as exc:
        return _fail("structure", str(exc))
    m, n = d.m, d.n
    pi = d.perm
    k = d.k if k is None else k
    gamma = d.gamma if gamma is None else gamma
    if not 0 <= k <= m - 1 or (k == 0 and gamma != TYPE_B):
        return _fail("class", f"k={k}, gamma={gamma}")
    for r in range(1, n):
        images = [pi[(r, s)] for s in range(d.counts[r])]
        if any(img[0] != (r + m) % n for img in images):
            return _fail("LD a i", f"edge {r} not mapped to edge {(r + m) % n}")
        if any(images[i][1] >= images[i + 1][1] for i in range(len(images) - 1)):
            return _fail("LD a i", f"second coordinates on edge {r} not increasing")
        if images[0][1] != 0:
            return _fail("LD a ii", f"pi({r},0) = {images[0]}")
    if gamma == TYPE_A and 0 not in d.A or gamma == TYPE_B and 0 not in d.B:
        return _fail("LD b i", f"0 is not in {gamma}")
    if pi[(0, 0)][0] != k:
        return _fail("LD b ii", f"pi(0,0) = {pi[(0, 0)]}")
    if pi[(0, d.c_index)] != (m, 0):
        return _fail("LD b iii", f"pi(0,{d.c_index}) = {pi[(0, d.c_index)]}")
    targets = [pi[(0, s)][0] for s in range(d.counts[0])]
    if any(not k <= t <= m for t in targets):
        return _fail("LD b iv", "an image of e_0 leaves edges k..m")
    if any(targets[i] > targets[i + 1] for i in range(len(targets) - 1)):
        return _fail("LD b iv", "first coordinates on e_0 decrease")
    for s1, s2 in itertools.combinations(range(d.counts[0]), 2):
        if targets[s1] != targets[s2]:
            continue
        t1, t2 = d.e0_type(s1), d.e0_type(s2)
        if t1 in "BC" and t2 != "B":
            return _fail("LD b v", f"{s1} in {t1} but {s2} in {t2}")
        if t1 == t2 == "A" and not pi[(0, s1)][1] > pi[(0, s2)][1]:
            return _fail("LD b vi", f"A points {s1}, {s2} not reversed")
        if t1 == t2 == "B" and not pi[(0, s1)][1] < pi[(0, s2)][1]:
            return _fail("LD b vi", f"B points {s1}, {s2} not preserved")
    return Report(True)


def require_legal(d: StarData, k=None, gamma=None, error=IllegalData) -> None:
    rep = validate_data(d, k, gamma)
    if not rep:
        raise error(f"{rep.clause}: {rep.detail}")


@dataclass(frozen=True)
class SidePartition:
    alpha: frozenset
    beta: frozenset


def side_partition(d: StarData) -> SidePartition:
    """Walk backwards from the fold point, switching sets after each A label."""
    require_legal(d)
    inv = d.inverse
    current = inv[(d.m, 0)]
    alpha, beta = set(), {current}
    in_beta = True
    for _ in range(2, d.period - d.n + 1):
        earlier = inv[current]
        if earlier[0] == 0 and earlier[1] in d.A:
            in_beta = not in_beta
        (beta if in_beta else alpha).add(earlier)
        current = earlier
    return SidePartition(frozenset(alpha), frozenset(beta))


def _tt_primed_a(d: StarData) -> bool:
    if len(d.A) != 1:
        return False
    x = d.perm[(0, d.A[0])]
    while x[0] != 0:
        x = d.perm[x]
    return d.C == (x[1],)


def is_train_track(d: StarData) -> Report:
    """The combinatorial train-track conditions TT a-d, cross-checked against TT' a and TT' d."""
    parts = side_partition(d)
    m, n, k = d.m, d.n, d.k
    pi = d.perm
    result = Report(True)
    cond_a = True
    # every A or B index is checked, the last one included (see TT' a)
    for s in range(d.counts[0]):
        img = pi[(0, s)]
        if s in d.B and img not in parts.alpha or s in d.A and img not in parts.beta:
            cond_a = False
            if result:
                result = _fail("TT a", f"pi(0,{s}) = {img} on the wrong side")
    primed_a = _tt_primed_a(d)
    assert cond_a == primed_a, f"TT a and TT' a disagree on {d.plain()}"
    if result:
        for r in range(k + 1, m):
            if d.counts[(r + n - m) % n] != 1:
                result = _fail("TT b", f"N_{(r + n - m) % n} != 1")
                break
    pre_k = (k + n - m) % n
    base = pi[(0, 0)][1]
    if result:
        for s in range(1, d.counts[pre_k]):
            img = pi[(pre_k, s)]
            if img[1] > base and img not in parts.beta:
                result = _fail("TT c", f"pi({pre_k},{s}) = {img} not in beta")
                break
    cond_d = d.gamma != TYPE_A or all(pi[(pre_k, s)][1] > base for s in range(1, d.counts[pre_k]))
    if cond_a:
        primed_d = d.gamma != TYPE_A or pi[(0, 0)] == (k, 1)
        assert cond_d == primed_d, f"TT d and TT' d disagree on {d.plain()}"
    if result and not cond_d:
        result = _fail("TT d", "gamma = A with an image of e_{k+n-m} below pi(0,0)")
    return result


def star_edge_image(q, r: int) -> list:
    """f_{m/n}(e_r) as a list of (edge, +1/-1) letters."""
    q = as_fraction(q)
    m, n = q.numerator, q.denominator
    if not 0 <= r < n:
        raise OutOfRange(f"edge {r} out of range")
    if r != 0:
        return [((r + m) % n, 1)]
    word = [(0, 1)]
    for j in range(1, m + 1):
        word += [(j, -1), (j, 1)]
    return word


def _itinerary(d: StarData, fold_symbol: str) -> tuple:
    """Markov symbols along the cycle: edges r > 0, and the three kinds of e_0 subinterval."""
    out = []
    for r, s in d.cycle:
        if r:
            out.append(("edge", r))
        elif s in d.A:
            out.append(("out", d.perm[(0, s)][0]))
        elif s in d.B:
            out.append(("in", d.perm[(0, s)][0]))
        else:
            out.append((fold_symbol, d.m))
    return tuple(out)


def _is_proper_power(word: tuple) -> bool:
    size = len(word)
    return any(size % p == 0 and word == word[p:] + word[:p] for p in range(1, size))


def is_realizable(d: StarData) -> bool:
    """Whether a periodic orbit of period #P can carry the data.

    The fold point sits on the boundary of two Markov intervals, so both
    itineraries belong to it; if either repeats with a shorter period the
    point would have that shorter period.
    """
    return not any(_is_proper_power(_itinerary(d, side)) for side in ("out", "in"))


# enumeration ---------------------------------------------------------------


def _chain_weights(m, n):
    """How many edge counts each e_0 point bound for e_j contributes to."""
    return {j: len(orbit_segment(Fraction(m, n), j, 0)) if j else 1 for j in range(m + 1)}


def _compositions(m, n, k, max_period):
    weights = _chain_weights(m, n)
    targets = list(range(k, m + 1))

    def rec(idx, budget, acc):
        if idx == len(targets):
            yield dict(acc)
            return
        j = targets[idx]
        lowest = 1 if j in (k, m) else 0
        for a in range(lowest, budget // weights[j] + 1):
            acc[j] = a
            yield from rec(idx + 1, budget - a * weights[j], acc)
        acc.pop(j, None)

    yield from rec(0, max_period, {})


def _interleavings(total, straight, n_a, n_b):
    """Assign positions 1..total-1 to straight/A/B points (position 0 is fixed)."""
    free = list(range(1, total))
    assert len(free) == straight + n_a + n_b
    for spos in itertools.combinations(free, straight):
        rest = [p for p in free if p not in spos]
        for apos in itertools.combinations(rest, n_a):
            bpos = [p for p in rest if p not in apos]
            yield list(spos), list(apos), bpos


def _orbits_for_composition(args):
    m, n, k, groups = args
    found = []
    targets = list(range(k, m + 1))
    counts = [0] * n
    counts[m % n] = groups[m]
    j = m
    for _ in range(n - 1):
        nxt = (j + m) % n
        counts[nxt] = counts[j] + groups.get(nxt, 0)
        j = nxt
    assert counts[0] == sum(groups.values())
    # A-count choices per group
    a_ranges = []
    for t in targets:
        if t == 0:
            a_ranges.append([0])
        elif t == m:
            a_ranges.append(range(0, groups[t]))
        else:
            a_ranges.append(range(0, groups[t] + 1))
    for a_counts in itertools.product(*a_ranges):
        n_a = dict(zip(targets, a_counts))
        # e_0 indices by group, in order
        s = 0
        kinds = {}
        members = {}
        for t in targets:
            idx = list(range(s, s + groups[t]))
            s += groups[t]
            if t == m:
                kinds[t] = ["A"] * n_a[t] + ["C"] + ["B"] * (groups[t] - n_a[t] - 1)
            else:
                kinds[t] = ["A"] * n_a[t] + ["B"] * (groups[t] - n_a[t])
            members[t] = idx
        per_edge = []
        for t in targets:
            straight = 0 if t == m else counts[(t - m) % n]
            n_b = groups[t] - n_a[t] - (1 if t == m else 0)
            extra_straight = straight - 1 if straight else 0
            per_edge.append(list(_interleavings(counts[t], extra_straight, n_a[t], n_b)))
        for choice in itertools.product(*per_edge):
            perm = {}
            A, B, C = [], [], []
            for t, (spos, apos, bpos) in zip(targets, choice):
                e0_members = members[t]
                a_members = [s for s, kind in zip(e0_members, kinds[t]) if kind == "A"]
                b_members = [s for s, kind in zip(e0_members, kinds[t]) if kind == "B"]
                c_members = [s for s, kind in zip(e0_members, kinds[t]) if kind == "C"]
                for s_idx, pos in zip(a_members, sorted(apos, reverse=True)):
                    perm[(0, s_idx)] = (t, pos)
                for s_idx, pos in zip(b_members, sorted(bpos)):
                    perm[(0, s_idx)] = (t, pos)
                for s_idx in c_members:
                    perm[(0, s_idx)] = (t, 0)
                A += a_members
                B += b_members
                C += c_members
                if t != m:
                    src = (t - m) % n
                    positions = [0] + sorted(spos)
                    for s_src, pos in enumerate(positions):
                        perm[(src, s_src)] = (t, pos)
            for r in range(1, n):
                dest = (r + m) % n
                if dest in targets:
                    continue
                for s_src in range(counts[r]):
                    perm[(r, s_src)] = (dest, s_src)
            try:
                d = StarData.from_perm(m, n, counts, perm, A, B, C)
            except IllegalData:
                continue
            found.append(d)
    return found


def enumerate_orbits(q, max_period: int, jobs: int = 1, tt_only: bool = False) -> list:
    """All legal data for f_q with period at most max_period, in canonical order."""
    q = as_fraction(q)
    m, n = q.numerator, q.denominator
    if not 0 < q <= HALF:
        raise OutOfRange(f"{q} is not in (0, 1/2]")
    tasks = [(m, n, k, groups) for k in range(m) for groups in _compositions(m, n, k, max_period)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(_orbits_for_composition, tasks, chunksize=4))
    else:
        batches = [_orbits_for_composition(t) for t in tasks]
    found = [d for batch in batches for d in batch]
    if tt_only:
        found = [d for d in found if is_train_track(d)]
    return sorted(found, key=StarData.sort_key)


# renormalization -----------------------------------------------------------


def _open_slope(q) -> Fraction:
    q = as_fraction(q)
    if not 0 < q < HALF:
        raise OutOfRange(f"{q} is not in (0, 1/2)")
    return q


def renormalize_phi(d: StarData, q) -> StarData:
    """Send legal (1/2, 0, B) data to (q, m-1, B) data by the block replacement."""
    q = _open_slope(q)
    if (d.m, d.n) != (1, 2):
        raise IllegalInput("phi takes data of slope 1/2")
    require_legal(d, 0, TYPE_B, IllegalInput)
    m, n = q.numerator, q.denominator
    low = set(orbit_segment(q, m - 1, 0))
    counts = [d.counts[0] if r in low else d.counts[1] for r in range(n)]
    pi = d.perm
    perm = {}
    for r in range(n):
        for s in range(counts[r]):
            if r == 0:
                t, u = pi[(0, s)]
                perm[(r, s)] = (t + m - 1, u)
            elif r == n - 1:
                perm[(r, s)] = (m - 1, pi[(1, s)][1])
            else:
                perm[(r, s)] = ((r + m) % n, s)
    out = StarData.from_perm(m, n, counts, perm, d.A, d.B, d.C)
    require_legal(out, m - 1, TYPE_B)
    return out


def renormalize_psi(d: StarData) -> StarData:
    """Inverse of renormalize_phi."""
    m, n = d.m, d.n
    if not 2 * m < n:
        raise IllegalInput("psi takes data of slope below 1/2")
    require_legal(d, m - 1, TYPE_B, IllegalInput)
    pi = d.perm
    counts = [d.counts[0], d.counts[n - 1]]
    perm = {}
    for s in range(counts[0]):
        t, u = pi[(0, s)]
        perm[(0, s)] = (0 if t == m - 1 else 1, u)
    for s in range(counts[1]):
        perm[(1, s)] = (0, pi[(n - 1, s)][1])
    out = StarData.from_perm(1, 2, counts, perm, d.A, d.B, d.C)
    require_legal(out, 0, TYPE_B)
    return out


# explicit train-track orbits ----------------------------------------------


def _fraction_pair(pq):
    if isinstance(pq, str):
        num, den = (int(x) for x in pq.split("/"))
        return num, den
    if isinstance(pq, tuple):
        return pq
    pq = as_fraction(pq)
    return pq.numerator, pq.denominator


def build_tt_orbit_B(q, i: int, pq) -> StarData:
    """The train-track orbit of class (q, k_i, B) attached to p/q in (0,1); i counts from 1."""
    q = _open_slope(q)
    p, qq = _fraction_pair(pq)
    if not 0 < p < qq:
        raise OutOfRange(f"{p}/{qq} is not in (0, 1)")
    if gcd(p, qq) != 1:
        raise NotCoprime(f"{p}/{qq}")
    adm = admissible_set(q)
    if not 1 <= i < len(adm):
        raise BadIndex(f"index {i} must satisfy 1 <= i < {len(adm)}")
    m, n = q.numerator, q.denominator
    k_lo, k_hi = adm[i - 1], adm[i]
    seg_r = set(orbit_segment(q, m, k_hi + n - m))
    seg_s = set(orbit_segment(q, k_hi, k_lo + n - m))
    seg_t = set(orbit_segment(q, k_lo, 0))
    assert len(seg_r) + len(seg_s) + len(seg_t) == n
    counts = []
    for r in range(n):
        if r in seg_r:
            counts.append(1)
        elif r in seg_s:
            counts.append(qq + 1 - p)
        else:
            counts.append(qq + 1)
    perm = {}
    for s in range(qq + 1):
        if s < p:
            perm[(0, s)] = (k_lo, qq - p + s)
        elif s == p:
            perm[(0, s)] = (k_hi, qq - p)
        elif s < qq:
            perm[(0, s)] = (k_hi, s - p)
        else:
            perm[(0, s)] = (m, 0)
    pre = (k_lo + n - m) % n
    for r in range(1, n):
        for s in range(counts[r]):
            perm[(r, s)] = ((r + m) % n, s)
    perm[(pre, qq - p)] = (k_lo, qq)
    A, C = [p], [qq]
    B = [s for s in range(qq) if s != p]
    d = StarData.from_perm(m, n, counts, perm, A, B, C)
    require_legal(d, k_lo, TYPE_B)
    return d


def build_tt_orbit_A(q, i: int) -> StarData:
    """The unique train-track orbit of class (q, k_i, A), for 2 <= i <= alpha."""
    q = _open_slope(q)
    adm = admissible_set(q)
    if not 2 <= i <= len(adm):
        raise BadIndex(f"index {i} must satisfy 2 <= i <= {len(adm)}")
    m, n = q.numerator, q.denominator
    k = adm[i - 1]
    seg_t = set(orbit_segment(q, k, 0))
    counts = [2 if r in seg_t else 1 for r in range(n)]
    perm = {(0, 0): (k, 1), (0, 1): (m, 0)}
    for r in range(1, n):
        for s in range(counts[r]):
            perm[(r, s)] = ((r + m) % n, s)
    d = StarData.from_perm(m, n, counts, perm, [0], [], [1])
    require_legal(d, k, TYPE_A)
    return d


# horseshoe coding ----------------------------------------------------------


@dataclass(frozen=True)
class IOPartition:
    inset: frozenset
    outset: frozenset


def io_partition(d: StarData) -> IOPartition:
    require_legal(d)
    m, n = d.m, d.n
    pivot = n - 2 * m
    x = d.perm[(0, 0)]
    inside = 0 in d.B
    inset, outset = set(), set()
    (inset if inside else outset).add(x)
    for _ in range(2, d.period - n + 1):
        r, s = x
        if r == 0 and s in d.A:
            inside = not inside
        elif pivot < r < n:
            inside = not inside
        elif r == pivot:
            inside = False
        x = d.perm[x]
        (inset if inside else outset).add(x)
    return IOPartition(frozenset(inset), frozenset(outset))


def horseshoe_code(d: StarData) -> str:
    """Code of a horseshoe orbit with the braid type of the star orbit (slope below 1/2)."""
    if 2 * d.m == d.n:
        raise HalfSlope("slope 1/2 codes are read directly; use half_slope_code")
    parts = io_partition(d)
    m, n = d.m, d.n
    pivot = n - 2 * m

    def symbol(label):
        r, s = label
        if r < pivot or label == (pivot, 0) or (r == pivot and label in parts.outset):
            return "0"
        return "1"

    x = (n - m, 0)
    word = []
    for _ in range(d.period):
        word.append(symbol(x))
        x = d.perm[x]
    return "".join(word)


def half_slope_code(d: StarData) -> str:
    """Read a horseshoe code off slope-1/2 data: symbol 1 exactly right of the fold."""
    if (d.m, d.n) != (1, 2):
        raise IllegalInput("half_slope_code takes slope 1/2 data")
    pi = d.perm
    x = (1, 0)
    symbols = []
    fold_at = None
    for i in range(d.period):
        r, s = x
        if r == 1:
            symbols.append("1")
        elif s in d.A:
            symbols.append("0")
        elif s in d.B:
            symbols.append("1" if pi[x][0] == 1 else "0")
        else:
            fold_at = i
            symbols.append("0")
        x = pi[x]
    word = "".join(symbols)
    if not is_maximal_code(word):
        word = word[:fold_at] + "1" + word[fold_at + 1 :]
    return word


def orbit_code(d: StarData) -> str:
    if 2 * d.m == d.n:
        return half_slope_code(d)
    return horseshoe_code(d)


def horseshoe_data(code: str) -> StarData:
    """Slope-1/2 data of the horseshoe orbit with the given maximal code."""
    if not is_maximal_code(code):
        raise NotMaximal(code)
    if len(code) < 2:
        raise IllegalInput("period must exceed 1")
    size = len(code)
    points = [EventuallyPeriodicSeq.periodic(code[i:] + code[:i]) for i in range(size)]
    fixed = seq_key(EventuallyPeriodicSeq.periodic("1"))
    order = sorted(range(size), key=lambda i: seq_key(points[i]))
    left = [i for i in order if seq_key(points[i]) < fixed]
    right = [i for i in reversed(order) if seq_key(points[i]) > fixed]
    label = {}
    for s, i in enumerate(left):
        label[i] = (0, s)
    for s, i in enumerate(right):
        label[i] = (1, s)
    perm = {label[i]: label[(i + 1) % size] for i in range(size)}
    top = right[0] if right else order[-1]
    fold = (top - 1) % size
    A, B, C = [], [], []
    for s, i in enumerate(left):
        nxt = label[(i + 1) % size]
        if i == fold:
            C.append(s)
        elif code[i] == "0" and nxt[0] == 1:
            A.append(s)
        else:
            B.append(s)
    return StarData.from_perm(1, 2, [len(left), len(right)], perm, A, B, C)


def star_rotation_number(d: StarData) -> Fraction:
    """Number of turns around the star divided by the period."""
    check_structure(d)
    wrap = sum(d.counts[r] for r in range(d.n - d.m, d.n))
    return Fraction(wrap, d.period)
