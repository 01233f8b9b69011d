import pytest

import strands_algebra as sa


def test_basis_ladder():
    ctx = sa.AlgebraContext(1, 1, [])
    x = sa.IState(1, [0])
    basis = sa.enumerate_basis(ctx, x, x, 4)
    assert [repr(g) for g in basis] == ["J{0}", "[2/0]_1 @ {0}", "[4/0]_1 @ {0}"]
    assert all(g.validate() == x for g in basis)


def test_mul_diff_grade():
    ctx = sa.AlgebraContext(1, 2, [])
    full = sa.IState(1, [0, 1])
    a = sa.parse_element("[2/0]_1", ctx, full)
    d = sa.diff(a)
    assert repr(d) == "[1/1]_1 @ {0,1}"
    assert sa.diff(d).is_zero()

    g = sa.grade(a.terms[0])
    assert (g.maslov, g.w, g.alexander) == (0, [2], 2)

    ctx1 = sa.AlgebraContext(1, 1, [])
    lo, hi = sa.IState(1, [0]), sa.IState(1, [1])
    prod = sa.single(sa.g_min(ctx1, lo, hi)) * sa.single(sa.g_min(ctx1, hi, lo))
    assert repr(prod) == "[2/0]_1 @ {0}"


def test_quiver_side_and_morphism():
    ctx = sa.AlgebraContext(1, 1, [])
    x = sa.IState(1, [0])
    u = sa.make_os_generator(ctx, x, x, [], [1])
    u.validate()
    assert repr(sa.phi(u)) == "[2/0]_1 @ {0}"
    assert sa.phi_closed_form(u) == sa.phi(u)

    path = sa.gamma_path(x, sa.IState(1, [1]))
    assert [repr(l) for l in path] == ["R_1"]
    loop = sa.evaluate_path(ctx, x, [sa.GeneratorLabel("R", 1), sa.GeneratorLabel("L", 1)])
    assert repr(loop) == "U1 @ {0} -> {0}"

    rep = sa.relation_check(2, 1, [])
    assert rep.ok() and rep.checked > 0


def test_homology_matches_prediction():
    ctx = sa.AlgebraContext(2, 1, [])
    x = sa.IState(2, [1])
    w = [2, 0]
    assert sa.homology_dims("A", ctx, x, x, w) == {0: 1}
    assert sa.homology_dims("B", ctx, x, x, w) == {0: 1}
    assert sa.predicted_dims(ctx, x, x, w) == {0: 1}


def test_refined_grading_collapses():
    ctx = sa.AlgebraContext(1, 2, [])
    g = sa.parse_element("[1/9]_1", ctx, sa.IState(1, [0, 1])).terms[0]
    dp = sa.deg_prime(g)
    m, coeff = sa.theta(ctx, dp)
    gv = sa.grade(g)
    assert m == gv.maslov and coeff.coeff == gv.w_un
    assert sa.psi_refine((m, coeff)) == (gv.maslov, gv.w)


def test_error_payloads():
    ctx = sa.AlgebraContext(1, 1, [])
    with pytest.raises(sa.GrammarError) as grammar:
        sa.parse_element("[1/", ctx)
    assert grammar.value.position == 3

    g = sa.make_generator(ctx, sa.IState(1, [1]), [], [(1, 0)])
    with pytest.raises(sa.ValidityError) as validity:
        g.validate()
    assert validity.value.condition == 3


def test_verify_suite():
    ((name, report, _seconds),) = sa.run_suites(["dsquared"], max_n=1)
    assert name == "dsquared" and report.ok() and report.checked == 134
