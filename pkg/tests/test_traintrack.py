from fractions import Fraction as F

import numpy as np
import pytest
import sympy
from orbit_examples import TYPE_A_2_5, RENORMALIZED_2_5, HORSESHOE_10010, SEVEN_POINT_1_3

from startrack.errors import NotAbsorbed, NotEfficient
from startrack.starorbit import enumerate_orbits, is_train_track, orbit_code
from startrack.symbolic import EventuallyPeriodicSeq, seq_key
from startrack.traintrack import (
    LEFT,
    MAIN,
    RIGHT,
    all_side_assignments,
    backtracking_free,
    build_bh_graph,
    check_absorbed,
    check_efficient,
    default_sides,
    growth_rate,
    has_star_train_track,
    is_irreducible,
    to_dot,
    transition_matrix,
)

NON_TT = enumerate_orbits(F(1, 3), 10)


def exact_radius(mat: np.ndarray) -> float:
    poly = sympy.Matrix(mat.tolist()).charpoly()
    return max(abs(complex(root)) for root in sympy.Poly(poly.as_expr()).nroots(n=30))


def test_horseshoe_10010_graph_shape():
    g = build_bh_graph(HORSESHOE_10010)
    assert len(g.main_edges) == 5
    assert len(g.peripheral_perm) == 5
    # pi(1,0) = (0,0) and pi(1,1) = (0,2): the image crosses e_{0,0} and e_{0,1}
    mains = [label for kind, label, _ in g.main_images[(1, 0)] if kind == MAIN]
    assert mains == [(0, 0), (0, 1)]


def test_peripheral_permutation_is_pi():
    g = build_bh_graph(TYPE_A_2_5)
    assert g.peripheral_perm == TYPE_A_2_5.perm


def test_tt_examples_are_efficient():
    for d in (SEVEN_POINT_1_3, TYPE_A_2_5, RENORMALIZED_2_5):
        g = build_bh_graph(d)
        assert check_absorbed(g)
        assert check_efficient(g)
        assert has_star_train_track(d)
        assert backtracking_free(g)


def test_flipping_a_side_breaks_absorption():
    sides = default_sides(SEVEN_POINT_1_3)
    for label in sides:
        if label[1] == 0:
            continue
        flipped = dict(sides)
        flipped[label] = LEFT if sides[label] == RIGHT else RIGHT
        assert not check_absorbed(build_bh_graph(SEVEN_POINT_1_3, flipped))


def test_absorbed_assignment_is_unique_for_tt_data():
    for q in (F(1, 3), F(1, 4), F(2, 5)):
        for d in enumerate_orbits(q, 9, tt_only=True):
            default = default_sides(d)
            passing = [s for s in all_side_assignments(d) if check_absorbed(build_bh_graph(d, s))]
            assert len(passing) == 1
            assert all(passing[0][x] == default[x] for x in passing[0])


def test_non_tt_data_is_inefficient_with_witness():
    bad = [d for d in NON_TT if not is_train_track(d)]
    assert bad
    for d in bad:
        g = build_bh_graph(d)
        assert not has_star_train_track(d)
        if check_absorbed(g):
            eff = check_efficient(g)
            assert not eff and eff.witness


def test_efficiency_needs_absorption():
    g = build_bh_graph(SEVEN_POINT_1_3)
    flipped = dict(g.sides)
    flipped[(1, 1)] = RIGHT if flipped[(1, 1)] == LEFT else LEFT
    with pytest.raises(NotAbsorbed):
        check_efficient(build_bh_graph(SEVEN_POINT_1_3, flipped))


def test_growth_matches_characteristic_polynomial():
    growth = growth_rate(build_bh_graph(SEVEN_POINT_1_3))
    assert growth.irreducible
    assert growth.radius > 1
    exact = exact_radius(growth.matrix)
    assert abs(growth.radius - exact) <= 1e-10 * exact
    # the root of x^3 - x^2 - 1
    assert abs(growth.radius - 1.465571231876768) < 1e-12


@pytest.mark.xfail(strict=True, reason="orbits with non-nested rotation intervals; see the Burau bracket test")
def test_renormalized_orbit_grows_faster():
    assert growth_rate(build_bh_graph(RENORMALIZED_2_5)).radius > growth_rate(build_bh_graph(SEVEN_POINT_1_3)).radius


def burau_lower_bound(code: str) -> float:
    """Largest Burau spectral radius on |t| = 1 of the horseshoe braid of a code."""
    size = len(code)
    points = [EventuallyPeriodicSeq.periodic(code[i:] + code[:i]) for i in range(size)]
    order = sorted(range(size), key=lambda i: seq_key(points[i]))
    where = {i: k for k, i in enumerate(order)}
    targets = [where[(order[k] + 1) % size] for k in range(size)]
    crossings = []
    for _ in range(size):
        for j in range(size - 1):
            if targets[j] > targets[j + 1]:
                targets[j], targets[j + 1] = targets[j + 1], targets[j]
                crossings.append(j)
    best = 0.0
    for theta in np.linspace(0, np.pi, 721):
        t = np.exp(1j * theta)
        mat = np.eye(size, dtype=complex)
        for j in crossings:
            gen = np.eye(size, dtype=complex)
            gen[j : j + 2, j : j + 2] = [[1 - t, t], [1, 0]]
            mat = mat @ gen
        best = max(best, max(abs(np.linalg.eigvals(mat))))
    return best


@pytest.mark.parametrize("d", [SEVEN_POINT_1_3, TYPE_A_2_5, RENORMALIZED_2_5], ids=["seven_point_1_3", "type_a_2_5", "renormalized_2_5"])
def test_growth_bounded_below_by_burau(d):
    radius = growth_rate(build_bh_graph(d)).radius
    bound = burau_lower_bound(orbit_code(d))
    assert bound <= radius + 1e-9


def test_permutation_matrix_has_radius_one():
    g = build_bh_graph(HORSESHOE_10010)
    mat = np.eye(3, dtype=np.int64)[[1, 2, 0]]
    assert is_irreducible(mat)
    assert abs(max(abs(np.linalg.eigvals(mat))) - 1) < 1e-12
    assert transition_matrix(g).shape == (5, 5)


def test_growth_rejects_inefficient_graphs():
    bad = next(d for d in NON_TT if not is_train_track(d) and check_absorbed(build_bh_graph(d)))
    with pytest.raises(NotEfficient):
        growth_rate(build_bh_graph(bad))


def test_dot_output():
    text = to_dot(build_bh_graph(SEVEN_POINT_1_3))
    assert text.startswith("digraph bh {") and text.rstrip().endswith("}")
    assert text.count("->") == 2 * len(SEVEN_POINT_1_3.labels)


def test_main_images_start_and_end_with_main_edges():
    g = build_bh_graph(TYPE_A_2_5)
    for word in g.main_images.values():
        assert word[0][0] == MAIN and word[-1][0] == MAIN
