import json
from fractions import Fraction

import pytest

from conftest import dk
from drumwidth.errors import ParamsInvalid
from drumwidth.exactcore import solve_linear
from drumwidth.family import (D1_MOTIF, U_MAX, U_MIN, V_FLOOR, FamilyParams, build_Dk, build_from_motif,
                              default_params, gamma_closure, load_params, skin_vertices_certified, validate_params)
from drumwidth.symmetry import TAU
from drumwidth.verify import check_phi


def two_line_params(v1):
    a2 = solve_linear([[Fraction(1, 100), Fraction(1, v1)], [Fraction(1, 102), 1 / V_FLOOR]], [1, 1]).particular
    return FamilyParams(2, ((100, 0), a2, (75, 75)))


def test_constants():
    assert V_FLOOR == Fraction(850, 3)
    assert (U_MIN, U_MAX) == (100, 102)


@pytest.mark.parametrize("k", range(1, 9))
def test_default_params_valid(k):
    rep = validate_params(default_params(k))
    assert rep.ok, rep.failures
    if k == 1:
        assert (rep.u, rep.v) == ([100], [300])
    else:
        assert rep.u[0] == 100 and rep.u[-1] == 102
        assert rep.v[-1] == V_FLOOR


@pytest.mark.parametrize("k", range(1, 9))
def test_vertex_count(k):
    assert dk(k).n == 16 * k + 24


def test_d1_is_motif_closure(d1):
    assert set(d1.polytope.points) == set(gamma_closure(D1_MOTIF))
    assert build_from_motif(D1_MOTIF).n == 40


def test_tau_swaps_skins(d1):
    top = {d1.polytope.points[i] for i in d1.top_idx}
    bot = {d1.polytope.points[i] for i in d1.bottom_idx}
    assert {TAU(p) for p in top} == bot


def test_all_points_are_vertices(d1):
    assert skin_vertices_certified(d1)


def test_invalid_params():
    with pytest.raises(ParamsInvalid):
        default_params(0)
    bad = FamilyParams(1, ((100, 0), (70, 75)))
    assert "endpoints" in validate_params(bad).failures
    flat = FamilyParams(2, ((100, 0), (99, 1), (75, 75)))   # intercept u = 175 > 102
    assert "u_in_range" in validate_params(flat).failures
    with pytest.raises(ParamsInvalid):
        build_Dk(flat)


def test_params_json_roundtrip(tmp_path):
    p = default_params(3)
    f = tmp_path / "p.json"
    f.write_text(json.dumps(p.to_json()))
    assert load_params(str(f)) == p


@pytest.mark.parametrize("v1,ok", [(600, True), (749, True), (751, False), (1000, False)])
def test_first_intercept_limit(v1, ok):
    # both choices satisfy the intercept checks; only v1 < 750 gives the expected phi values
    p = two_line_params(v1)
    assert validate_params(p).ok
    assert all(check_phi(build_Dk(p), 2)["checks"].values()) is ok


def test_v1_1000_second_vertex():
    assert two_line_params(1000).a[1] == (Fraction(1290, 13), Fraction(100, 13))
