from fractions import Fraction as F
from math import gcd

import pytest

from startrack.errors import NoInnermostBacktracking, NoSuchBacktracking, OutOfRange, WrongForm
from startrack.farey import left_child, right_child
from startrack.pruning import (
    Glue,
    PullTight,
    RewriteTrace,
    construct_from_horseshoe,
    endo_equivalent,
    f_endo,
    farey_path,
    g_endo,
    glue,
    normalize,
    procedure_L,
    procedure_R,
    pull_tight,
    replay,
    tighten_g,
)


def slopes(max_den, closed=True):
    for n in range(2, max_den + 1):
        for m in range(1, n // 2 + 1):
            if gcd(m, n) == 1 and (closed or 2 * m < n):
                yield F(m, n)


def total_length(t):
    return sum(len(w) for w in t.images.values())


def test_f_half():
    t = f_endo(F(1, 2))
    assert t.images == {0: ((0, 1), (1, -1), (1, 1)), 1: ((0, 1),)}
    assert t.listing() == "e_0 -> e0 E1 e1\ne_1 -> e0"


def test_g_forms():
    g = g_endo(F(4, 11))
    assert g.images[0] == ((0, 1), (1, -1), (1, 1), (2, -1), (2, 1), (3, -1), (3, 1), (4, -1), (4, 1))
    assert g.images[10] == ((3, 1), (4, -1), (4, 1))
    assert all(g.images[r] == (((r + 4) % 11, 1),) for r in range(1, 10))
    with pytest.raises(OutOfRange):
        g_endo(F(1, 2))


def test_pull_tight_g_to_f():
    for q in slopes(20, closed=False):
        n, m = q.denominator, q.numerator
        assert pull_tight(g_endo(q), n - 1, m) == f_endo(q)


def test_glue_then_backtrack():
    q = F(3, 7)
    t = glue(f_endo(q), 0)
    assert t.images[0] == ((0, 1), (7, -1), (7, 1), (1, -1), (1, 1), (2, -1), (2, 1))
    assert t.images[4][-2:] == ((7, -1), (7, 1))
    assert t.cyclic_order[:2] == (0, 7)


def test_errors():
    with pytest.raises(NoInnermostBacktracking):
        glue(f_endo(F(3, 7)), 1)
    with pytest.raises(NoSuchBacktracking):
        pull_tight(f_endo(F(3, 7)), 1, 2)
    with pytest.raises(WrongForm):
        procedure_R(f_endo(F(2, 5)))
    with pytest.raises(WrongForm):
        procedure_L(g_endo(F(2, 5)))


def test_procedure_l_glue_sequence():
    trace = RewriteTrace()
    result = procedure_L(f_endo(F(3, 7)), trace)
    assert endo_equivalent(result, g_endo(F(5, 12)))
    kinds = []
    for step in trace.steps:
        if isinstance(step, Glue):
            kinds.append(f"Glue {step.edge}")
        elif isinstance(step, PullTight):
            kinds.append("Pull Tight")
    assert kinds == ["Glue 0", "Glue 4", "Glue 1", "Pull Tight", "Glue 5", "Glue 2", "Pull Tight"]
    assert [s.new_edge for s in trace.steps if isinstance(s, Glue)] == [7, 8, 9, 10, 11]


def test_procedures_match_children():
    assert endo_equivalent(procedure_L(f_endo(F(1, 2))), g_endo(F(1, 3)))
    assert endo_equivalent(procedure_R(g_endo(F(1, 4))), g_endo(F(2, 7)))
    for q in slopes(25):
        assert endo_equivalent(procedure_L(f_endo(q)), g_endo(left_child(q)))
        if q < F(1, 2):
            assert endo_equivalent(procedure_R(g_endo(q)), g_endo(right_child(q)))


def test_edge_accounting():
    for q in slopes(25):
        child = left_child(q)
        result = procedure_L(f_endo(q))
        assert result.edge_count == child.denominator
        band = result.images[0]
        assert [e for e, sign in band if sign > 0] == list(range(child.numerator + 1))


def test_monotone_lengths():
    q = F(3, 7)
    trace = RewriteTrace()
    procedure_L(f_endo(q), trace)
    t = f_endo(q)
    for step in trace.steps:
        before = total_length(t)
        t = replay(t, RewriteTrace([step]))
        if isinstance(step, PullTight):
            assert total_length(t) == before - 2


def test_navigation():
    _, trace = construct_from_horseshoe(F(3, 10))
    assert trace.summary == ["L", "tight", "L", "R", "R", "tight"]
    endo, trace = construct_from_horseshoe(F(1, 2))
    assert trace.steps == [] and endo == f_endo(F(1, 2))
    _, trace = construct_from_horseshoe(F(2, 5))
    # Procedure R acts on the g form, so no tightening between L and R
    assert trace.summary == ["L", "R", "tight"]
    assert [m for m, _ in farey_path(F(3, 10))] == ["L", "L", "R", "R"]


def test_endpoint_equality_and_replay():
    for q in slopes(13):
        endo, trace = construct_from_horseshoe(q)
        assert endo_equivalent(endo, f_endo(q))
        assert endo_equivalent(replay(f_endo(F(1, 2)), trace), endo)


def test_equivalence():
    t = f_endo(F(2, 5))
    assert endo_equivalent(t, t)
    assert not endo_equivalent(f_endo(F(1, 3)), f_endo(F(1, 4)))
    assert not endo_equivalent(f_endo(F(1, 5)), f_endo(F(2, 5)))
    assert endo_equivalent(normalize(glue(f_endo(F(2, 5)), 0)), normalize(glue(f_endo(F(2, 5)), 0)))


def test_tighten_g():
    assert tighten_g(g_endo(F(2, 7))) == f_endo(F(2, 7))
