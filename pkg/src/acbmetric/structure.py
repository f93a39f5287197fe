"""Almost contact B-metric structures on a Lie algebra and their derived tensors."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import lie, ratlin
from .errors import DimensionMismatch, SingularMetric
from .lie import LieAlgebra


@dataclass(frozen=True, eq=False)
class ACBStructure:
    """The data ``(phi, xi, eta, g)`` on the Lie algebra ``algebra``.

    ``phi[k, j]`` is the ``e_k`` component of ``phi e_j``.
    """

    algebra: LieAlgebra
    g: np.ndarray
    phi: np.ndarray
    xi: np.ndarray
    eta: np.ndarray

    def __post_init__(self):
        d = self.algebra.dim
        for name, shape in (("g", (d, d)), ("phi", (d, d)), ("xi", (d,)), ("eta", (d,))):
            arr = ratlin.frac_array(getattr(self, name))
            if arr.shape != shape:
                raise DimensionMismatch(f"{name} has shape {arr.shape}, expected {shape}")
            object.__setattr__(self, name, arr)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def n(self) -> int:
        return (self.dim - 1) // 2

    @property
    def eta_eta(self) -> np.ndarray:
        return np.multiply.outer(self.eta, self.eta)

    def with_metric(self, g) -> ACBStructure:
        return ACBStructure(self.algebra, g, self.phi, self.xi, self.eta)

    def change_basis(self, P) -> ACBStructure:
        """Components of the same structure in the basis ``e'_a = P[i, a] e_i``."""
        P = ratlin.frac_array(P)
        Pinv = ratlin.inverse(P)
        return ACBStructure(
            self.algebra.change_basis(P),
            P.T.dot(self.g).dot(P),
            Pinv.dot(self.phi).dot(P),
            Pinv.dot(self.xi),
            self.eta.dot(P),
        )


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    passed: bool
    witness: tuple | None = None  # (index, residual) of the first violation


@dataclass(frozen=True)
class StructureVerdict:
    checks: dict

    @property
    def valid(self) -> bool:
        return all(c.passed for c in self.checks.values())

    @property
    def failures(self) -> list[str]:
        return [name for name, c in self.checks.items() if not c.passed]


def _residual_check(name, residual) -> AxiomCheck:
    hit = ratlin.first_nonzero(residual)
    return AxiomCheck(name, hit is None, hit)


def validate_structure(s: ACBStructure) -> StructureVerdict:
    """Check every defining axiom and its standard consequences.

    All failures are reported, not only the first one.
    """
    d, n = s.dim, s.n
    g, phi, xi, eta = s.g, s.phi, s.xi, s.eta
    one = ratlin.identity(d)
    checks = [
        AxiomCheck("odd_dimension", d % 2 == 1 and d >= 3, None if d % 2 == 1 and d >= 3 else ((), d)),
        _residual_check("phi_xi_zero", phi.dot(xi)),
        _residual_check("phi_squared", phi.dot(phi) + one - np.multiply.outer(xi, eta)),
        _residual_check("eta_phi_zero", eta.dot(phi)),
        _residual_check("eta_xi_one", np.array([eta.dot(xi) - 1], dtype=object)),
        _residual_check("b_metric", phi.T.dot(g).dot(phi) + g - s.eta_eta),
        _residual_check("g_symmetric", g - g.T),
    ]
    sig = ratlin.signature(g) if ratlin.is_symmetric(g) else None
    expected = ratlin.Signature(n + 1, n, 0)
    checks.append(AxiomCheck("signature", sig == expected, None if sig == expected else ((), sig)))
    checks += [
        _residual_check("g_phi_symmetric", phi.T.dot(g) - g.dot(phi)),
        _residual_check("g_xi_eta", g.dot(xi) - eta),
        _residual_check("g_xi_xi_one", np.array([xi.dot(g).dot(xi) - 1], dtype=object)),
    ]
    try:
        gamma = lie.levi_civita(s.algebra, g)
    except (SingularMetric, ValueError):
        checks.append(AxiomCheck("eta_nabla_xi_zero", False, ((), "metric not invertible")))
    else:
        nabla_xi = lie.covariant_derivative_vector(xi, gamma)
        checks.append(_residual_check("eta_nabla_xi_zero", nabla_xi.dot(eta)))
    jac = lie.check_jacobi(s.algebra)
    checks.append(AxiomCheck("jacobi", not jac, (jac[0], None) if jac else None))
    return StructureVerdict({c.name: c for c in checks})


def associated_metric(s: ACBStructure) -> np.ndarray:
    """``g~(x, y) = g(x, phi y) + eta(x) eta(y)``."""
    gt = s.g.dot(s.phi) + s.eta_eta
    if ratlin.signature(gt).zero:
        raise SingularMetric("associated metric is degenerate")
    return gt


@dataclass(frozen=True, eq=False)
class FundamentalTensor:
    F: np.ndarray
    theta: np.ndarray
    theta_star: np.ndarray
    omega: np.ndarray


def nabla_phi(s: ACBStructure, gamma) -> np.ndarray:
    """``D[i, k, j]``: ``e_k`` component of ``(nabla_{e_i} phi) e_j``."""
    return lie.covariant_derivative_11(s.phi, gamma)


def fundamental_tensor(s: ACBStructure, gamma) -> FundamentalTensor:
    """``F(x, y, z) = g((nabla_x phi) y, z)`` and its Lee forms."""
    F = ratlin.einsum("imj,mk->ijk", nabla_phi(s, gamma), s.g)
    ginv = ratlin.invert_symmetric(s.g)
    return FundamentalTensor(
        F=F,
        theta=ratlin.einsum("ij,ijk->k", ginv, F),
        theta_star=ratlin.einsum("ij,lj,ilk->k", ginv, s.phi, F),
        omega=ratlin.einsum("i,j,ijk->k", s.xi, s.xi, F),
    )


def fundamental_tensor_identities(s: ACBStructure, ft: FundamentalTensor, gamma) -> dict:
    """The general identities satisfied by ``F`` and the Lee forms.

    They are theorems for any valid structure, so a failure points at a bug
    or an invalid input.
    """
    F, phi, xi, eta = ft.F, s.phi, s.xi, s.eta
    F_phi_phi = ratlin.einsum("ilm,lj,mk->ijk", F, phi, phi)
    F_xi_z = ratlin.einsum("ilk,l->ik", F, xi)
    F_y_xi = ratlin.einsum("ijl,l->ij", F, xi)
    decomposition = (F - F_phi_phi - ratlin.einsum("j,ik->ijk", eta, F_xi_z)
                     - ratlin.einsum("k,ij->ijk", eta, F_y_xi))
    nabla_xi = lie.covariant_derivative_vector(xi, gamma)
    F_phiy_xi = ratlin.einsum("ilm,lj,m->ij", F, phi, xi)
    return {
        "F_symmetric": ratlin.first_nonzero(F - np.einsum("ikj->ijk", F)) is None,
        "F_decomposition": ratlin.is_zero(decomposition),
        "F_phi_xi": ratlin.is_zero(F_phiy_xi - nabla_xi.dot(s.g)),
        "omega_xi_zero": ft.omega.dot(xi) == 0,
        "lee_phi_relation": ratlin.is_zero(ft.theta_star.dot(phi) + ft.theta.dot(phi).dot(phi)),
    }


def is_cosymplectic(ft: FundamentalTensor) -> bool:
    return ratlin.is_zero(ft.F)


def sasaki_like_rhs(s: ACBStructure) -> np.ndarray:
    """``-g(x,y) xi - eta(y) x + 2 eta(x) eta(y) xi`` laid out like :func:`nabla_phi`."""
    d = s.dim
    return (-ratlin.einsum("ij,k->ikj", s.g, s.xi)
            - ratlin.einsum("j,ik->ikj", s.eta, ratlin.identity(d))
            + 2 * ratlin.einsum("i,j,k->ikj", s.eta, s.eta, s.xi))


@dataclass(frozen=True)
class SasakiVerdict:
    holds: bool
    witness: tuple | None = None
    consequences: dict | None = None

    def __bool__(self):
        return self.holds


def sasaki_consequences(s: ACBStructure, gamma, g_tilde=None, curv=None) -> dict:
    """Identities every Sasaki-like structure must satisfy, evaluated directly.

    ``curv`` may carry already computed curvature data (from ``lie.ricci_data``)
    to avoid running the two curvature pipelines again.
    """
    d, n = s.dim, s.n
    g, phi, xi, eta = s.g, s.phi, s.xi, s.eta
    one = ratlin.identity(d)
    r13 = curv.riemann_13 if curv is not None else lie.riemann(s.algebra, g, gamma)[0]
    rho = lie.ricci_tensor(r13)
    ft = fundamental_tensor(s, gamma)
    nabla_xi = lie.covariant_derivative_vector(xi, gamma)
    nabla_eta = lie.covariant_derivative_covector(eta, gamma)
    R_xy_xi = ratlin.einsum("ijkl,k->ijl", r13, xi)
    R_xi_yz = ratlin.einsum("i,ijkl->jkl", xi, r13)
    out = {
        "nabla_xi": ratlin.is_zero(nabla_xi + phi.T),
        "nabla_eta": ratlin.is_zero(nabla_eta + g.dot(phi)),
        "R_xy_xi": ratlin.is_zero(R_xy_xi - ratlin.einsum("j,il->ijl", eta, one)
                                  + ratlin.einsum("i,jl->ijl", eta, one)),
        "rho_x_xi": ratlin.is_zero(rho.dot(xi) - 2 * n * eta),
        "R_xi_yz": ratlin.is_zero(R_xi_yz - ratlin.einsum("jk,l->jkl", g, xi)
                                  + ratlin.einsum("k,jl->jkl", eta, one)),
        "rho_xi_xi": xi.dot(rho).dot(xi) == 2 * n,
        "lee_forms": (ratlin.is_zero(ft.theta + 2 * n * eta)
                      and ratlin.is_zero(ft.theta_star) and ratlin.is_zero(ft.omega)),
    }
    if g_tilde is None:
        g_tilde = associated_metric(s)
    ginv = ratlin.invert_symmetric(g)
    tau_star = ratlin.einsum("ij,il,lj->", ginv, rho, phi)
    if curv is not None and curv.tau_tilde is not None:
        tau_tilde = curv.tau_tilde
    else:
        tau_tilde = lie.scalar_curvature(s.algebra, g_tilde)
    out["tau_tilde_relation"] = tau_tilde == -tau_star + 2 * n
    half_lie_xi = lie.lie_derivative_metric(xi, g, gamma) / 2
    out["half_lie_xi_g"] = ratlin.is_zero(half_lie_xi + g_tilde - s.eta_eta)
    return out


def is_sasaki_like(s: ACBStructure, gamma, with_consequences: bool = True,
                   curv=None) -> SasakiVerdict:
    """Decide the Sasaki-like condition from its definition.

    ``(nabla_x phi) y = -g(x,y) xi - eta(y) x + 2 eta(x) eta(y) xi`` is checked
    on every basis pair; when it holds, the derived identities are evaluated
    independently and reported in ``consequences``.
    """
    hit = ratlin.first_nonzero(nabla_phi(s, gamma) - sasaki_like_rhs(s))
    if hit is not None:
        (i, k, j), val = hit
        return SasakiVerdict(False, ((i, j, k), val))
    cons = sasaki_consequences(s, gamma, curv=curv) if with_consequences else None
    return SasakiVerdict(True, None, cons)


def contact_basis(s: ACBStructure) -> list[np.ndarray]:
    """A basis of ``ker eta`` (exact nullspace of the functional ``eta``)."""
    return ratlin.nullspace(s.eta.reshape(1, -1))

