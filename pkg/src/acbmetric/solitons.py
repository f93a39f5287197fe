"""Einstein-like fits, Ricci-like solitons and parallel symmetric tensors.

Every fit is an exact affine solve over the independent components of a
symmetric (0,2)-tensor equation.  When the unknowns are not determined
uniquely the full solution space is kept instead of picking a representative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import lie, ratlin
from .errors import DegenerateCase, NotApplicable
from .ratlin import AffineSolutionSpace
from .structure import ACBStructure, associated_metric, is_sasaki_like


def _sym_pairs(d):
    return [(i, j) for i in range(d) for j in range(i, d)]


def _fit_symmetric(columns, target) -> AffineSolutionSpace:
    """Solve ``sum_m x_m columns[m] = target`` over the ``i <= j`` components."""
    pairs = _sym_pairs(target.shape[0])
    A = [[col[i, j] for col in columns] for i, j in pairs]
    b = [target[i, j] for i, j in pairs]
    return ratlin.solve_affine(A, b)


def _exists(sol: AffineSolutionSpace, forced: dict) -> bool:
    """Whether some point of ``sol`` has the coordinates in ``forced``."""
    if not sol.consistent:
        return False
    # Coordinates are affine in the nullspace coefficients t: p + N t.
    A, b = [], []
    for m, value in forced.items():
        A.append([v[m] for v in sol.nullspace_basis])
        b.append(value - sol.particular[m])
    if not sol.nullspace_basis:
        return all(x == 0 for x in b)
    return ratlin.solve_affine(A, b).consistent


@dataclass(frozen=True)
class EinsteinLikeFit:
    """Result of fitting ``rho = a g + b g~ + c eta(x)eta``."""

    consistent: bool
    a: Fraction | None
    b: Fraction | None
    c: Fraction | None
    classification: str
    solution: AffineSolutionSpace
    checks: dict = field(default_factory=dict)

    @property
    def unique(self) -> bool:
        return self.solution.unique

    @property
    def is_einstein(self) -> bool:
        return self.classification == "Einstein"


def einstein_like_fit(rho, g, g_tilde, eta, *, sasaki_n=None, tau=None, tau_tilde=None) -> EinsteinLikeFit:
    """Fit the Ricci tensor to the span of ``g``, ``g~`` and ``eta (x) eta``.

    With ``sasaki_n`` set (the structure is Sasaki-like, ``dim = 2n+1``) a
    consistent fit is also checked against ``a+b+c = 2n`` and, when the
    scalar curvatures are supplied, ``tau = 2n(a+1)`` and ``tau~ = 2n(b+1)``.
    """
    eta = ratlin.frac_array(eta)
    sol = _fit_symmetric([ratlin.frac_array(g), ratlin.frac_array(g_tilde),
                          np.multiply.outer(eta, eta)], ratlin.frac_array(rho))
    if not sol.consistent:
        return EinsteinLikeFit(False, None, None, None, "none", sol)
    a, b, c = sol.particular
    if _exists(sol, {1: 0, 2: 0}):
        cls = "Einstein"
    elif _exists(sol, {1: 0}):
        cls = "eta-Einstein"
    else:
        cls = "Einstein-like"
    checks = {}
    if sasaki_n is not None and sol.unique:
        n = sasaki_n
        checks["abc_sum"] = a + b + c == 2 * n
        if tau is not None:
            checks["tau"] = tau == 2 * n * (a + 1)
        if tau_tilde is not None:
            checks["tau_tilde"] = tau_tilde == 2 * n * (b + 1)
    return EinsteinLikeFit(True, a, b, c, cls, sol, checks)


@dataclass(frozen=True)
class SolitonFit:
    """Result of solving ``1/2 L_v g + rho + lam g + mu g~ + nu eta(x)eta = 0``."""

    consistent: bool
    lam: Fraction | None
    mu: Fraction | None
    nu: Fraction | None
    potential: tuple
    solution: AffineSolutionSpace
    checks: dict = field(default_factory=dict)

    @property
    def unique(self) -> bool:
        return self.solution.unique

    @property
    def kind(self) -> str | None:
        if not self.consistent:
            return None
        if self.mu == 0 and self.nu == 0:
            return "Ricci"
        if self.mu == 0:
            return "eta-Ricci"
        return "Ricci-like"


def vertical_factor(s: ACBStructure, v) -> Fraction | None:
    """``k`` with ``v = k xi``, or ``None`` when ``v`` is not vertical."""
    v = ratlin.frac_array(v)
    k = s.eta.dot(v)
    return k if ratlin.is_zero(v - k * s.xi) else None


def soliton_fit(v, s: ACBStructure, gamma, rho, *, g_tilde=None, sasaki=None,
                einstein: EinsteinLikeFit | None = None) -> SolitonFit:
    """Solve for ``(lam, mu, nu)`` given the left-invariant potential ``v``.

    On a Sasaki-like structure with vertical ``v = k xi`` a consistent fit is
    checked against ``lam + mu + nu = -2n``; for ``v = xi`` and a consistent
    ``einstein`` fit also against ``a + lam = 0``, ``b + mu - 1 = 0`` and
    ``c + nu + 1 = 0``.
    """
    v = ratlin.frac_array(v)
    if g_tilde is None:
        g_tilde = associated_metric(s)
    target = -ratlin.frac_array(rho) - lie.lie_derivative_metric(v, s.g, gamma) / 2
    sol = _fit_symmetric([s.g, g_tilde, s.eta_eta], target)
    if not sol.consistent:
        return SolitonFit(False, None, None, None, tuple(v), sol)
    lam, mu, nu = sol.particular
    checks = {}
    if sasaki is None:
        sasaki = is_sasaki_like(s, gamma, with_consequences=False).holds
    k = vertical_factor(s, v)
    if sasaki and k is not None and sol.unique:
        checks["lmn_sum"] = lam + mu + nu == -2 * s.n
        if k == 1 and einstein is not None and einstein.consistent and einstein.unique:
            checks["a_plus_lambda"] = einstein.a + lam == 0
            checks["b_plus_mu_minus_1"] = einstein.b + mu - 1 == 0
            checks["c_plus_nu_plus_1"] = einstein.c + nu + 1 == 0
    return SolitonFit(True, lam, mu, nu, tuple(v), sol, checks)


def corollary_constants(tau, tau_tilde, n) -> dict:
    """The six soliton / Einstein-like constants in terms of ``tau`` and ``tau~``."""
    tau, tau_tilde = Fraction(tau), Fraction(tau_tilde)
    two_n = 2 * n
    return {
        "lam": 1 - tau / two_n,
        "mu": 2 - tau_tilde / two_n,
        "nu": (tau + tau_tilde) / two_n - two_n - 3,
        "a": tau / two_n - 1,
        "b": tau_tilde / two_n - 1,
        "c": two_n + 2 - (tau + tau_tilde) / two_n,
    }


@dataclass(frozen=True)
class CorollaryCheck:
    predicted: dict
    actual: dict
    passed: dict

    @property
    def holds(self) -> bool:
        return all(self.passed.values())


def corollary_scalar_relations(fit: SolitonFit, tau, tau_tilde, n,
                               einstein: EinsteinLikeFit | None = None) -> CorollaryCheck:
    """Compare a xi-soliton fit (and Einstein-like fit) with the scalar-curvature formulas.

    Without ``einstein`` the Einstein-like constants are taken from
    ``a = -lam``, ``b = 1 - mu``, ``c = -1 - nu``.
    """
    if not fit.consistent:
        raise NotApplicable("soliton fit is inconsistent")
    predicted = corollary_constants(tau, tau_tilde, n)
    if einstein is not None and einstein.consistent:
        a, b, c = einstein.a, einstein.b, einstein.c
    else:
        a, b, c = -fit.lam, 1 - fit.mu, -1 - fit.nu
    actual = {"lam": fit.lam, "mu": fit.mu, "nu": fit.nu, "a": a, "b": b, "c": c}
    passed = {key: predicted[key] == actual[key] for key in predicted}
    return CorollaryCheck(predicted, actual, passed)


def _g_phi_terms(s: ACBStructure):
    """``A[i,j] = g(phi e_i, phi e_j)`` and ``B[i,j] = g(e_i, phi e_j)``."""
    return s.phi.T.dot(s.g).dot(s.phi), s.g.dot(s.phi)


def _sym_eta(T, eta):
    """``T(x, y) eta(z) + T(x, z) eta(y)``."""
    return np.einsum("ij,k->ijk", T, eta) + np.einsum("ik,j->ijk", T, eta)


def nabla_rho_closed_form(fit: SolitonFit, s: ACBStructure) -> np.ndarray:
    """Closed form of ``nabla rho`` for a xi-soliton on a Sasaki-like structure.

    ``(1-mu){g(phi x,phi y)eta(z) + g(phi x,phi z)eta(y)}
    + (mu+nu){g(x,phi y)eta(z) + g(x,phi z)eta(y)}``.
    """
    if not fit.consistent:
        raise NotApplicable("soliton fit is inconsistent")
    A, B = _g_phi_terms(s)
    return (1 - fit.mu) * _sym_eta(A, s.eta) + (fit.mu + fit.nu) * _sym_eta(B, s.eta)


def recurrence_coefficients(lam, mu, n) -> tuple[Fraction, Fraction]:
    """Coefficients ``(c1, c2)`` of the recurrent form of ``nabla rho``.

    ``c1 = ((1-mu)^2 + lam(lam+2n)) / D`` and ``c2 = 2n(1-mu) / D`` with
    ``D = lam^2 + (1-mu)^2``.  Undefined at ``(lam, mu) = (0, 1)``.

    The published value ``c2 = -2(lam+n)(1-mu) / D`` comes from a sign slip
    when eliminating ``g(x, phi y)``; it agrees with the one here only when
    ``mu = 1`` and otherwise does not reproduce ``nabla rho``.
    ``recurrence_coefficients_published`` keeps it for comparison.
    """
    lam, mu = Fraction(lam), Fraction(mu)
    den = lam**2 + (1 - mu) ** 2
    if den == 0:
        raise DegenerateCase("(lam, mu) = (0, 1): recurrence denominator vanishes")
    c1 = ((1 - mu) ** 2 + lam * (lam + 2 * n)) / den
    c2 = 2 * n * (1 - mu) / den
    return c1, c2


def recurrence_coefficients_published(lam, mu, n) -> tuple[Fraction, Fraction]:
    """``(c1, c2)`` exactly as printed in the source, ``c2 = -2(lam+n)(1-mu) / D``."""
    c1, _ = recurrence_coefficients(lam, mu, n)
    lam, mu = Fraction(lam), Fraction(mu)
    return c1, -2 * (lam + n) * (1 - mu) / (lam**2 + (1 - mu) ** 2)


def recurrence_tensor(lam, mu, n, rho, s: ACBStructure) -> np.ndarray:
    """``c1 {rho(x,phi y)eta(z) + ...} + c2 {rho(phi x,phi y)eta(z) + ...}``."""
    c1, c2 = recurrence_coefficients(lam, mu, n)
    rho = ratlin.frac_array(rho)
    return c1 * _sym_eta(rho.dot(s.phi), s.eta) + c2 * _sym_eta(s.phi.T.dot(rho).dot(s.phi), s.eta)


@dataclass(frozen=True)
class VerticalPotentialReport:
    k: Fraction
    fit: SolitonFit
    einstein: EinsteinLikeFit
    checks: dict


def vertical_potential_analysis(k, s: ACBStructure, gamma, rho, *, g_tilde=None,
                                sasaki=None) -> VerticalPotentialReport:
    """Fit a soliton with potential ``k xi`` and test the vertical-potential conclusions.

    For a consistent fit: ``mu = k``, ``lam + nu = -k - 2n``,
    ``lam + mu + nu = -2n``, the Einstein-like constants are
    ``(-lam, 0, lam + 2n)`` and ``rho = -lam g + (lam + 2n) eta (x) eta``.
    """
    k = ratlin.as_fraction(k)
    if sasaki is None:
        sasaki = is_sasaki_like(s, gamma, with_consequences=False).holds
    if not sasaki:
        raise NotApplicable("vertical potential analysis needs a Sasaki-like structure")
    if g_tilde is None:
        g_tilde = associated_metric(s)
    n = s.n
    ein = einstein_like_fit(rho, s.g, g_tilde, s.eta, sasaki_n=n)
    fit = soliton_fit(k * s.xi, s, gamma, rho, g_tilde=g_tilde, sasaki=True, einstein=ein)
    checks = {}
    if fit.consistent and fit.unique:
        lam, mu, nu = fit.lam, fit.mu, fit.nu
        checks["mu_equals_k"] = mu == k
        checks["lambda_plus_nu"] = lam + nu == -k - 2 * n
        checks["lmn_sum"] = lam + mu + nu == -2 * n
        checks["eta_einstein_constants"] = (
            ein.consistent and (ein.a, ein.b, ein.c) == (-lam, 0, lam + 2 * n)
        )
        checks["rho_form"] = ratlin.is_zero(
            ratlin.frac_array(rho) + lam * s.g - (lam + 2 * n) * s.eta_eta
        )
        checks.update({f"fit.{name}": ok for name, ok in fit.checks.items()})
    return VerticalPotentialReport(k, fit, ein, checks)


@dataclass(frozen=True, eq=False)
class ParallelTensorSpace:
    basis: list

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def contains(self, h) -> bool:
        """Whether the symmetric tensor ``h`` lies in the span of the basis."""
        h = ratlin.frac_array(h)
        if not self.basis:
            return ratlin.is_zero(h)
        return _fit_symmetric(self.basis, h).consistent


def _unit_symmetric(d, i, j):
    E = ratlin.zeros((d, d))
    E[i, j] = E[j, i] = Fraction(1)
    return E


def parallel_symmetric_space(gamma, g) -> ParallelTensorSpace:
    """Exact basis of ``{h symmetric : nabla h = 0}``.

    Basis elements are scaled so their first nonzero component is 1.
    """
    d = ratlin.frac_array(g).shape[0]
    pairs = _sym_pairs(d)
    units = [_unit_symmetric(d, i, j) for i, j in pairs]
    columns = [lie.covariant_derivative(E, gamma).ravel() for E in units]
    A = np.array(columns, dtype=object).T
    basis = []
    for vec in ratlin.nullspace(A):
        _, lead = ratlin.first_nonzero(vec)
        vec = vec / lead
        h = ratlin.zeros((d, d))
        for coeff, E in zip(vec, units):
            h = h + coeff * E
        basis.append(h)
    return ParallelTensorSpace(basis)


@dataclass(frozen=True, eq=False)
class SolitonTensorH:
    h: np.ndarray
    parallel: bool
    lam: Fraction | None
    checks: dict


def soliton_tensor_h(s: ACBStructure, gamma, rho, mu, nu, *, g_tilde=None, sasaki=None) -> SolitonTensorH:
    """``h = 1/2 L_xi g + rho + mu g~ + nu eta (x) eta`` and whether it is parallel.

    When ``h`` is parallel it must equal ``h(xi,xi) g`` with
    ``h(xi,xi) = 2n + mu + nu``, and the structure then carries the xi-soliton
    with ``lam = -h(xi,xi)``; all three facts are recorded in ``checks``.
    """
    mu, nu = Fraction(mu), Fraction(nu)
    if sasaki is None:
        sasaki = is_sasaki_like(s, gamma, with_consequences=False).holds
    if not sasaki:
        raise NotApplicable("soliton tensor h analysis needs a Sasaki-like structure")
    if g_tilde is None:
        g_tilde = associated_metric(s)
    rho = ratlin.frac_array(rho)
    h = lie.lie_derivative_metric(s.xi, s.g, gamma) / 2 + rho + mu * g_tilde + nu * s.eta_eta
    checks = {"sasaki_form": ratlin.is_zero(h - rho - (mu - 1) * g_tilde - (nu + 1) * s.eta_eta)}
    parallel = ratlin.is_zero(lie.covariant_derivative(h, gamma))
    lam = None
    if parallel:
        h_xi_xi = s.xi.dot(h).dot(s.xi)
        lam = -h_xi_xi
        checks["metric_multiple"] = ratlin.is_zero(h - h_xi_xi * s.g)
        checks["h_xi_xi"] = h_xi_xi == 2 * s.n + mu + nu
        fit = soliton_fit(s.xi, s, gamma, rho, g_tilde=g_tilde, sasaki=True)
        checks["admits_soliton"] = fit.consistent and (fit.lam, fit.mu, fit.nu) == (lam, mu, nu)
    else:
        fit = soliton_fit(s.xi, s, gamma, rho, g_tilde=g_tilde, sasaki=True)
        checks["no_soliton"] = not (fit.consistent and _exists(fit.solution, {1: mu, 2: nu}))
    return SolitonTensorH(h, parallel, lam, checks)


def synthetic_ricci(s: ACBStructure, lam, mu, nu, *, g_tilde=None) -> np.ndarray:
    """The symmetric tensor a xi-soliton with constants ``(lam, mu, nu)`` forces.

    On a Sasaki-like structure ``1/2 L_xi g = -g~ + eta (x) eta``, so the soliton
    equation pins ``rho = -lam g + (1 - mu) g~ - (1 + nu) eta (x) eta``.  Paired
    with the real connection of ``s`` this gives a consistent stand-in for
    Ricci tensors (e.g. Einstein ones) that no small Lie group in the corpus
    realizes; see the README for what it can and cannot exercise.
    """
    lam, mu, nu = Fraction(lam), Fraction(mu), Fraction(nu)
    if g_tilde is None:
        g_tilde = associated_metric(s)
    return -lam * s.g + (1 - mu) * g_tilde - (1 + nu) * s.eta_eta
