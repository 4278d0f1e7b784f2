"""Dynamical invariants on the blow-up complex: balls, mu, nu, classification."""

import pytest

from blowcube import (
    action_on_ball,
    ball,
    base_points,
    builtin,
    check_degree_bound,
    check_gromov,
    classify,
    classify_isometry,
    degree_growth_class,
    distance,
    exc_count_sequence,
    geodesics,
    hyperplanes,
    identity,
    inverse,
    marked_vertex,
    mu,
    nu1,
    transition,
    vertex_distance,
    vertex_equiv,
)
from blowcube.config import RunConfig
from blowcube.errors import ComplexError, MapError
from blowcube.maps import linear_map


def sigma_ball():
    sigma = builtin("sigma")
    universe = (base_points(sigma).all_points()
                | base_points(inverse(sigma)).all_points())
    return ball(marked_vertex(identity(2)), 3, universe, markings=[sigma])


@pytest.fixture(scope="module")
def figure_ball():
    return sigma_ball()


# ---------------------------------------------------------------------------
# marked vertices
# ---------------------------------------------------------------------------

def test_marked_vertex_validation():
    v = marked_vertex(identity(2))
    assert v.picard_rank == 1
    with pytest.raises(MapError):
        marked_vertex(builtin("mon3"))  # wrong dimension
    pts = base_points(builtin("henon")).all_points()
    top = max(pts, key=lambda p: p.height)
    with pytest.raises(ComplexError):
        marked_vertex(identity(2), blown=[top])  # not parent-closed
    assert marked_vertex(identity(2), blown=pts).picard_rank == 4


def test_transition_recovers_the_relative_marking():
    sigma = builtin("sigma")
    v_id, v_sigma = marked_vertex(identity(2)), marked_vertex(sigma)
    assert transition(v_sigma, v_id).key() == sigma.key()
    assert vertex_distance(v_id, v_sigma) == 6
    assert vertex_distance(v_sigma, v_id) == 6
    assert not vertex_equiv(v_id, v_sigma)


def test_blowing_up_all_three_base_points_fixes_the_vertex():
    sigma = builtin("sigma")
    pts = base_points(sigma).all_points()
    assert vertex_equiv(marked_vertex(identity(2), pts),
                        marked_vertex(sigma, pts))


# ---------------------------------------------------------------------------
# the radius-3 ball around the plane
# ---------------------------------------------------------------------------

def test_ball_shape(figure_ball):
    C = figure_ball.complex
    assert len(C.vertices) == 15
    assert len(C.edges) == 24
    assert len(C.cubes.get(2, ())) == 12
    assert len(C.cubes.get(3, ())) == 2
    assert len(hyperplanes(C)) == 6
    assert check_gromov(C).flag


def test_ball_distance_and_geodesics(figure_ball):
    B = figure_ball
    assert B.center == "id[]"
    sid = B.find(marked_vertex(builtin("sigma")))
    assert sid == "sigma[]"
    assert distance(B.complex, B.center, sid) == 6
    res = geodesics(B.complex, B.center, sid)
    assert res.complete and len(res) == 36


def test_ball_membership(figure_ball):
    assert figure_ball.find(marked_vertex(builtin("henon"))) is None


def test_action_is_elliptic_with_the_del_pezzo_vertex(figure_ball):
    B = figure_ball
    act = action_on_ball(builtin("sigma"), B)
    rep = classify_isometry(B.complex, act, B.center, N=4)
    assert rep.kind == "elliptic"
    assert rep.distances == (0, 6, 0, 6, 0)
    assert rep.fixed_vertex == "id[[0 : 0 : 1], [0 : 1 : 0], [1 : 0 : 0]]"


def test_action_outside_the_ball_is_refused(figure_ball):
    with pytest.raises(ComplexError):
        action_on_ball(builtin("henon"), figure_ball)


# ---------------------------------------------------------------------------
# growth invariants
# ---------------------------------------------------------------------------

def test_mu_of_the_standard_involution_is_zero():
    res = mu(builtin("sigma"))
    assert res.value == 0
    assert res.sequence == (3, 0, 3, 0, 3)
    assert res.fixed_vertex == "id[[0 : 0 : 1], [0 : 1 : 0], [1 : 0 : 0]]"


def test_mu_counts_accumulating_base_points():
    res = mu(builtin("henon"))
    assert res.value == 3
    assert res.sequence == (3, 6, 9, 12, 15)
    res = mu(builtin("jonq1"))
    assert res.value == 2
    assert res.sequence == (3, 5, 7, 9, 11)


def test_mu_of_the_cubic_map():
    res = mu(builtin("lox1"), N=3)
    assert res.value == 4
    assert res.sequence == (5, 9, 13)


def test_exc_count_sequences():
    assert exc_count_sequence(builtin("henon"), 5) == [1, 1, 1, 1, 1]
    assert exc_count_sequence(builtin("jonq1"), 5) == [2, 2, 2, 2, 2]
    assert exc_count_sequence(builtin("jonq2"), 5) == [2, 3, 4, 5, 6]


def test_nu_verdicts():
    res = nu1(builtin("henon"))
    assert (res.nu_f, res.nu_finv) == (0, 0)
    res = nu1(builtin("jonq2"))
    assert (res.nu_f, res.nu_finv) == (1, 1)
    assert res.seq_f == (2, 3, 4, 5, 6)
    assert res.seq_finv == (2, 3, 4, 5, 6)


def test_degree_growth_classes():
    assert degree_growth_class(builtin("sigma")).kind == "bounded"
    assert degree_growth_class(builtin("jonq1")).kind == "linear"
    assert degree_growth_class(builtin("jonq2")).kind == "linear"
    assert degree_growth_class(builtin("henon")).kind == "exponential"
    assert degree_growth_class(builtin("lox1"), N=3).kind == "exponential"


def test_degree_growth_lambda_estimate():
    growth = degree_growth_class(builtin("henon"))
    assert growth.lambda_pair == (32, 5)
    assert abs(growth.lambda_estimate - 2.0) < 1e-12


# ---------------------------------------------------------------------------
# the classification table
# ---------------------------------------------------------------------------

def test_classification_rows():
    assert classify(builtin("sigma")).table_row == 1
    assert classify(builtin("jonq1")).table_row == 2
    assert classify(builtin("jonq2")).table_row == 3
    assert classify(builtin("henon")).table_row == 6
    assert classify(builtin("hen2")).table_row == 6
    assert classify(builtin("lox1"), N=3).table_row == 7


def test_classification_isometry_triples():
    rep = classify(builtin("sigma"))
    assert rep.isometries == ("elliptic", "elliptic", "elliptic")
    assert rep.caps_hit == ()
    rep = classify(builtin("jonq2"))
    assert rep.isometries == ("parabolic", "loxodromic", "loxodromic")
    rep = classify(builtin("lox1"), N=3)
    assert rep.isometries == ("loxodromic", "loxodromic", "loxodromic")


def test_classification_report_dict_shape():
    data = classify(builtin("sigma")).to_dict()
    assert data["table_row"] == 1
    assert data["mu"] == 0
    assert data["nu_forward"] == 0 and data["nu_backward"] == 0
    assert data["degree_class"] == "bounded"
    assert data["isometries"] == {"hyperbolic_space": "elliptic",
                                  "blowup_complex": "elliptic",
                                  "restricted_complex": "elliptic"}


def test_caps_leave_invariants_undecided_but_reported():
    f = builtin("lox1")
    rep = classify(f, N=5, cfg=RunConfig(degree_cap=50))
    assert rep.growth.kind == "undecided"
    assert any("degree cap" in c for c in rep.caps_hit)
    assert rep.table_row is None


# ---------------------------------------------------------------------------
# the contracted-curve degree bound
# ---------------------------------------------------------------------------

def test_degree_bound_for_the_linear_fibration():
    rep = check_degree_bound(builtin("jonq2"), N=8)
    assert not rep.vacuous
    assert rep.holds
    assert [(n, d, e) for n, d, e, _ok in rep.rows] == [
        (n, n + 1, n + 1) for n in range(1, 9)]


def test_degree_bound_is_vacuous_without_contraction_growth():
    rep = check_degree_bound(builtin("henon"), N=4)
    assert rep.vacuous and rep.holds
    rep = check_degree_bound(linear_map([[0, 1, 0], [1, 0, 0], [0, 0, 1]]), N=3)
    assert rep.vacuous
    assert rep.rows == ((1, 1, 0, True), (2, 1, 0, True), (3, 1, 0, True))
