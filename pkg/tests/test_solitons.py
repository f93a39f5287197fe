import random
from fractions import Fraction

import numpy as np
import pytest

from acbmetric import lie, ratlin
from acbmetric import solitons as S
from acbmetric.errors import DegenerateCase, NotApplicable

from conftest import GRID, abelian3, sasaki5


def _einstein_rho(m):
    return 2 * m.n * m.structure.g


def test_einstein_fit_golden(m5):
    e = m5.einstein
    assert e.consistent and e.unique
    assert (e.a, e.b, e.c) == (0, 0, 4)
    assert e.classification == "eta-Einstein"
    assert all(e.checks.values()) and set(e.checks) == {"abc_sum", "tau", "tau_tilde"}


def test_einstein_fit_on_einstein_input(m5):
    s = m5.structure
    e = S.einstein_like_fit(_einstein_rho(m5), s.g, m5.g_tilde, s.eta, sasaki_n=2)
    assert (e.a, e.b, e.c, e.classification) == (4, 0, 0, "Einstein")


def test_einstein_fit_outside_span(m5):
    s = m5.structure
    rho = m5.rho.copy()
    rho[1, 2] = rho[2, 1] = Fraction(1)
    e = S.einstein_like_fit(rho, s.g, m5.g_tilde, s.eta)
    assert not e.consistent and e.classification == "none"


def test_einstein_fit_nonunique():
    # abelian flat, rho = 0: g, g~ and eta(x)eta are independent, so (0,0,0) only
    s = abelian3()
    e = S.einstein_like_fit(ratlin.zeros((3, 3)), s.g, S.associated_metric(s), s.eta)
    assert e.unique and (e.a, e.b, e.c) == (0, 0, 0)
    # a degenerate column set keeps the whole solution space
    sol = S._fit_symmetric([s.g, s.g], 3 * s.g)
    assert sol.dimension == 1


def test_soliton_fit_golden(m5):
    s = m5.structure
    fit = S.soliton_fit(s.xi, s, m5.gamma, m5.rho, einstein=m5.einstein)
    assert (fit.lam, fit.mu, fit.nu) == (0, 1, -5)
    assert fit.lam + fit.mu + fit.nu == -4
    assert set(fit.checks) == {"lmn_sum", "a_plus_lambda", "b_plus_mu_minus_1", "c_plus_nu_plus_1"}
    assert all(fit.checks.values())
    # v = 2 xi: by hand 1/2 L_v g = -2 g~ + 2 eta(x)eta, so mu = 2 and lam + nu = -6
    fit2 = S.soliton_fit(2 * s.xi, s, m5.gamma, m5.rho)
    assert fit2.mu == 2 and fit2.lam + fit2.nu == -6


def test_soliton_fit_kinds(m5):
    s = m5.structure
    assert S.soliton_fit(0 * s.xi, s, m5.gamma, m5.rho).kind == "eta-Ricci"
    assert S.soliton_fit(s.xi, s, m5.gamma, m5.rho).kind == "Ricci-like"


def test_corollary(m5):
    c = m5.curvature
    fit = S.soliton_fit(m5.structure.xi, m5.structure, m5.gamma, m5.rho)
    cor = S.corollary_scalar_relations(fit, c.tau, c.tau_tilde, 2, m5.einstein)
    assert cor.holds
    assert (cor.predicted["lam"], cor.predicted["mu"], cor.predicted["nu"]) == (0, 1, -5)
    assert not S.corollary_scalar_relations(fit, c.tau + 1, c.tau_tilde, 2).holds


def test_corollary_einstein_values():
    n = 2
    k = S.corollary_constants(2 * n * (2 * n + 1), 2 * n, n)
    assert (k["lam"], k["mu"], k["nu"]) == (-2 * n, 1, -1)
    assert (k["a"], k["b"], k["c"]) == (2 * n, 0, 0)


def test_corollary_inconsistent_fit():
    bad = S.SolitonFit(False, None, None, None, (), ratlin.solve_affine([[1], [1]], [0, 1]))
    with pytest.raises(NotApplicable):
        S.corollary_scalar_relations(bad, 4, 4, 2)


def test_closed_form_on_grid():
    for p, q in GRID:
        m = sasaki5(p, q)
        fit = S.soliton_fit(m.structure.xi, m.structure, m.gamma, m.rho)
        closed = S.nabla_rho_closed_form(fit, m.structure)
        assert (closed == m.nabla_rho).all()
        assert closed[1, 3, 0] == 4


def test_closed_form_einstein_constants_vanish(m5):
    fit = S.SolitonFit(True, Fraction(-4), Fraction(1), Fraction(-1), (), None)
    assert ratlin.is_zero(S.nabla_rho_closed_form(fit, m5.structure))


def test_closed_form_eta_parallel_and_along_xi(m5):
    s = m5.structure
    fit = S.soliton_fit(s.xi, s, m5.gamma, m5.rho)
    T = S.nabla_rho_closed_form(fit, s)
    assert ratlin.is_zero(np.einsum("ijk,ja,kb->iab", T, s.phi, s.phi))
    assert ratlin.is_zero(np.einsum("i,ijk->jk", s.xi, T))


def test_synthetic_ricci_is_consistent(m5):
    s = m5.structure
    rng = random.Random(5)
    for _ in range(10):
        lam, mu = (Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(2))
        nu = -4 - lam - mu
        rho = S.synthetic_ricci(s, lam, mu, nu)
        fit = S.soliton_fit(s.xi, s, m5.gamma, rho)
        assert (fit.lam, fit.mu, fit.nu) == (lam, mu, nu)
        assert (S.nabla_rho_closed_form(fit, s) == lie.covariant_derivative(rho, m5.gamma)).all()


def test_recurrence_coefficients():
    with pytest.raises(DegenerateCase):
        S.recurrence_coefficients(0, 1, 2)
    assert S.recurrence_coefficients(-4, 1, 2) == (0, 0)
    # corrected second coefficient, see notes on the published formula
    assert S.recurrence_coefficients(1, 0, 2) == (3, 2)
    assert S.recurrence_coefficients_published(1, 0, 2) == (3, -3)
    # the two agree when mu = 1
    assert S.recurrence_coefficients(3, 1, 2) == S.recurrence_coefficients_published(3, 1, 2)


def test_recurrence_reproduces_nabla_rho(m5):
    s = m5.structure
    rng = random.Random(11)
    for _ in range(10):
        lam, mu = (Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(2))
        if (lam, mu) == (0, 1):
            continue
        rho = S.synthetic_ricci(s, lam, mu, -4 - lam - mu)
        direct = lie.covariant_derivative(rho, m5.gamma)
        assert (S.recurrence_tensor(lam, mu, 2, rho, s) == direct).all()


def test_published_recurrence_fails_off_mu_one(m5):
    s = m5.structure
    rho = S.synthetic_ricci(s, 1, 0, -5)
    c1, c2 = S.recurrence_coefficients_published(1, 0, 2)
    T = c1 * S._sym_eta(rho.dot(s.phi), s.eta) + c2 * S._sym_eta(s.phi.T.dot(rho).dot(s.phi), s.eta)
    assert not (T == lie.covariant_derivative(rho, m5.gamma)).all()


@pytest.mark.parametrize("k, expect", [
    (1, (0, 1, -5)),
    (2, (0, 2, -6)),
    (-1, (0, -1, -3)),
    (Fraction(3, 2), (0, Fraction(3, 2), Fraction(-11, 2))),
    (0, (0, 0, -4)),
])
def test_vertical_potential(m5, k, expect):
    r = S.vertical_potential_analysis(k, m5.structure, m5.gamma, m5.rho)
    assert (r.fit.lam, r.fit.mu, r.fit.nu) == expect
    assert all(r.checks.values()) and "mu_equals_k" in r.checks
    assert (r.einstein.a, r.einstein.b, r.einstein.c) == (0, 0, 4)


def test_vertical_potential_einstein_input(m5):
    r = S.vertical_potential_analysis(1, m5.structure, m5.gamma, _einstein_rho(m5))
    assert (r.fit.lam, r.fit.mu, r.fit.nu) == (-4, 1, -1)
    assert all(r.checks.values())


def test_vertical_potential_needs_sasaki():
    s = abelian3()
    with pytest.raises(NotApplicable):
        S.vertical_potential_analysis(1, s, lie.levi_civita(s.algebra, s.g), ratlin.zeros((3, 3)))


def test_parallel_space(m5):
    sp_ = S.parallel_symmetric_space(m5.gamma, m5.structure.g)
    assert sp_.dimension == 1 and (sp_.basis[0] == m5.structure.g).all()
    s = abelian3()
    flat = S.parallel_symmetric_space(lie.levi_civita(s.algebra, s.g), s.g)
    assert flat.dimension == 6 and flat.contains(s.g)
    assert not sp_.contains(m5.g_tilde)


def test_soliton_tensor_h(m5):
    s = m5.structure
    h = S.soliton_tensor_h(s, m5.gamma, m5.rho, 1, -5)
    assert ratlin.is_zero(h.h) and h.parallel and h.lam == 0
    assert all(h.checks.values())
    h2 = S.soliton_tensor_h(s, m5.gamma, m5.rho, 1, -4)
    assert (h2.h == s.eta_eta).all() and not h2.parallel
    assert all(h2.checks.values())


def test_soliton_tensor_h_parallel_nonzero(m5):
    # Einstein stand-in rho = 4g: with (mu, nu) = (1, -1) the tensor h is rho itself
    h = S.soliton_tensor_h(m5.structure, m5.gamma, _einstein_rho(m5), 1, -1)
    assert h.parallel and h.lam == -4
    assert (h.h == 4 * m5.structure.g).all()
    assert all(h.checks.values())


def test_soliton_tensor_h_needs_sasaki():
    s = abelian3()
    with pytest.raises(NotApplicable):
        S.soliton_tensor_h(s, lie.levi_civita(s.algebra, s.g), ratlin.zeros((3, 3)), 1, -1)
