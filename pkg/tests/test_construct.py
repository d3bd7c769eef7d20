import numpy as np
import pytest

from lrctower import (
    TowerSpec,
    artin_schreier_kernel,
    build_recovery_group,
    construct_lrc,
    enumerate_places,
    evaluation_matrix,
    make_field,
    rowspace_intersection,
    spanning_set,
)
from lrctower.errors import BudgetTooSmall, IllegalOrder
from lrctower import gflinalg


def _groups_m1(gf9):
    spec = TowerSpec("gs96", gf9, 1)
    return (spec,
            build_recovery_group(spec, "additive", shifts="kernel"),
            build_recovery_group(spec, "multiplicative", order=2))


def test_spanning_set_additive_worked_example(gf9):
    spec, h1, _ = _groups_m1(gf9)
    v = spanning_set(spec, h1, 4)
    shapes = [(f.g_power, f.w_power) for f in v.functions]
    # {1, x, g, g*x} with g of degree 3
    assert sorted(shapes) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert all(f.g_roots in ((), (0, 3, 6)) for f in v.functions)


def test_spanning_set_multiplicative_worked_example(gf9):
    spec, _, h2 = _groups_m1(gf9)
    v = spanning_set(spec, h2, 4)
    assert [f.total_exponents() for f in v.functions] == [(0,), (2,), (4,)]


def test_spanning_set_budget_zero(gf9):
    spec, h1, h2 = _groups_m1(gf9)
    for h in (h1, h2):
        v = spanning_set(spec, h, 0)
        assert len(v) == 1 and v.functions[0].total_exponents() == (0,)


def closed_form_dim(budget, r, order):
    """Rational-level dimension count: sum over w-powers of the invariant
    monomial counts that fit the budget."""
    return sum(
        (budget - l) // order + 1
        for l in range(max(r, 1))
        if budget - l >= 0
    )


@pytest.mark.parametrize("budget", range(0, 12))
def test_rational_level_dimension_formula(gf9, budget):
    spec, h1, h2 = _groups_m1(gf9)
    places = enumerate_places(spec)
    for h in (h1, h2):
        v = spanning_set(spec, h, budget)
        mat = evaluation_matrix(v, places)
        expect = closed_form_dim(budget, h.r, h.order)
        # dimension == count at the rational level (distinct monomial degrees)
        assert len(v) == expect
        if budget < len(places):
            assert gflinalg.rank(gf9, mat) == expect


def test_evaluation_matrix_rows(gf9):
    spec, h1, _ = _groups_m1(gf9)
    places = enumerate_places(spec)
    v = spanning_set(spec, h1, 4)
    mat = evaluation_matrix(v, places)
    assert mat.shape == (len(v), 6)
    assert (mat[0] == 1).all()  # constant row
    assert list(mat[1]) == [p.coords[0] for p in places]  # projection row


def test_rowspace_intersection_trivial_cases(gf9):
    eye = np.eye(3, dtype=np.int64)
    out = rowspace_intersection(gf9, eye, eye)
    assert (out == eye).all()
    a = np.array([[1, 0, 0]])
    b = np.array([[0, 1, 0]])
    assert rowspace_intersection(gf9, a, b).shape == (0, 3)


def test_golden_intersection_matches_coefficient_model(gf9, golden_code):
    """Independent oracle: the intersection must be exactly the evaluations
    of span{1, x^4 + x^2} (solve the parity constraints by hand)."""
    places = [p.coords[0] for p in golden_code.places]
    one = [1] * 6
    h = [gf9.add(gf9.pow(a, 4), gf9.pow(a, 2)) for a in places]
    oracle = np.array([one, h], dtype=np.int64)
    gen = golden_code.generator_matrix
    stacked = np.vstack([gen, oracle])
    assert gflinalg.rank(gf9, oracle) == 2
    assert gflinalg.rank(gf9, gen) == 2
    assert gflinalg.rank(gf9, stacked) == 2  # same row space


def test_golden_code_parameters(gf9, golden_code):
    p = golden_code.params
    assert (p.n, p.k, p.d_designed, p.r1, p.r2) == (6, 2, 2, 2, 1)
    d = golden_code.dims
    assert (d.dim_v1, d.dim_v2, d.dim_sum, d.budget) == (4, 3, 5, 4)
    assert p.k == d.dim_v1 + d.dim_v2 - d.dim_sum


def test_tower_code_parameters(tower_code):
    p = tower_code.params
    assert p.n == 18 and p.k == 4 and (p.r1, p.r2) == (2, 1)
    assert tower_code.dims.caps is not None
    assert sum(tower_code.dims.caps) * 3 <= tower_code.dims.budget


def test_hermitian_code_parameters(hermitian_code):
    p = hermitian_code.params
    assert p.n == 120 and p.k == 5 and (p.r1, p.r2) == (1, 2)
    d = hermitian_code.dims
    assert p.k == d.dim_v1 + d.dim_v2 - d.dim_sum == 7 + 9 - 11


def test_generator_rows_live_in_both_spaces(golden_code, tower_code):
    for code in (golden_code, tower_code):
        fld = code.field
        places = code.places
        for h, caps in ((code.group1, code.dims.caps), (code.group2, code.dims.caps)):
            v = spanning_set(code.spec, h, code.dims.budget, caps)
            mat = evaluation_matrix(v, places)
            for row in code.generator_matrix:
                assert gflinalg.in_rowspace(fld, mat, row)


def test_recovery_set_geometry(golden_code, tower_code, hermitian_code):
    for code in (golden_code, tower_code, hermitian_code):
        for i, (s1, s2) in enumerate(code.recovery_sets):
            assert len(s1) == code.params.r1
            assert len(s2) == code.params.r2
            assert i not in s1 and i not in s2
            assert not set(s1) & set(s2)


def test_every_codeword_meets_designed_distance(golden_code, tower_code):
    from lrctower import brute_force_distance

    for code in (golden_code, tower_code):
        assert brute_force_distance(code) >= code.params.d_designed


def test_construct_errors(gf9):
    spec, h1, h2 = _groups_m1(gf9)
    with pytest.raises(ValueError):
        construct_lrc(spec, h1, h2, 0)
    with pytest.raises(ValueError):
        construct_lrc(spec, h1, h2, 7)
    # d = n leaves budget 0 < (r1 - 1) * pole degree of w
    with pytest.raises(BudgetTooSmall):
        construct_lrc(spec, h1, h2, 6)
    trivial = build_recovery_group(spec, "multiplicative", order=1)
    with pytest.raises(IllegalOrder):
        construct_lrc(spec, h1, trivial, 2)


def test_full_distance_target_gives_repetition_code(gf16):
    """Both groups of order 2: budget 0 leaves only constants, a weight-n code."""
    spec = TowerSpec("gs96", gf16, 1)
    ker = [e.value for e in artin_schreier_kernel(gf16) if e.value]
    h1 = build_recovery_group(spec, "additive", shifts=ker[:1])
    h2 = build_recovery_group(spec, "additive", shifts=ker[1:2])
    n = len(enumerate_places(spec))
    code = construct_lrc(spec, h1, h2, n)
    assert code.params.k == 1
    from lrctower import brute_force_distance

    assert brute_force_distance(code) == n


def test_xz_tower_additive_pair_code(gf16):
    """Pair of shift groups on the Hermitian level (orders 2 x 2 <= l = 4)."""
    spec = TowerSpec("gs95", gf16, 2)
    ker = [e.value for e in artin_schreier_kernel(gf16) if e.value]
    h1 = build_recovery_group(spec, "additive", shifts=ker[:1])
    h2 = build_recovery_group(spec, "additive", shifts=ker[1:2])
    code = construct_lrc(spec, h1, h2, 40)
    assert code.params.n == 60 and (code.params.r1, code.params.r2) == (1, 1)
    assert code.params.k >= 2
    from lrctower import verify_code

    assert verify_code(code).ok


def test_spanning_functions_respect_budget(gf9, gf25):
    from lrctower import pole_degree

    cases = [
        (TowerSpec("gs96", gf9, 2), "additive", {"shifts": "kernel"}),
        (TowerSpec("gs96", gf9, 2), "multiplicative", {"order": 2}),
        (TowerSpec("gs95", gf25, 2), "multiplicative", {"order": 3}),
    ]
    for spec, kind, kwargs in cases:
        h = build_recovery_group(spec, kind, **kwargs)
        for budget in (0, 5, 11, 20):
            v = spanning_set(spec, h, budget)
            for f in v.functions:
                assert pole_degree(f, spec) <= budget
                assert 0 <= f.w_power <= max(h.r - 1, 0)


def test_scalar_pair_on_y_tower_gf49():
    """Coprime scalar groups (orders 2 and 3) both act on every coordinate."""
    f49 = make_field(7, 2)
    spec = TowerSpec("gs96", f49, 1)
    h1 = build_recovery_group(spec, "multiplicative", order=2)
    h2 = build_recovery_group(spec, "multiplicative", order=3)
    from lrctower import combine, verify_code

    assert combine(h1, h2).structure == "direct"
    code = construct_lrc(spec, h1, h2, 30)
    assert code.params.n == 42 and (code.params.r1, code.params.r2) == (1, 2)
    assert code.params.k >= 2
    assert verify_code(code).ok


def test_level_three_code(gf9):
    spec = TowerSpec("gs96", gf9, 3)
    h1 = build_recovery_group(spec, "additive", shifts="kernel")
    h2 = build_recovery_group(spec, "multiplicative", order=2)
    code = construct_lrc(spec, h1, h2, 18)
    assert code.params.n == 54 and code.params.k >= 2
    assert sum(code.dims.caps) * 9 <= code.dims.budget
    from lrctower import verify_code

    assert verify_code(code).ok


def test_mixed_pair_on_y_tower_gf16(gf16):
    """Kernel shifts with the full scalar group (orders 4 x 3)."""
    spec = TowerSpec("gs96", gf16, 2)
    h1 = build_recovery_group(spec, "additive", shifts="kernel")
    h2 = build_recovery_group(spec, "multiplicative", order=3)
    code = construct_lrc(spec, h1, h2, 12)
    assert code.params.n == 48 and (code.params.r1, code.params.r2) == (3, 2)
    from lrctower import verify_code

    assert verify_code(code).ok
