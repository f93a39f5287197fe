"""Left-invariant geometry on a Lie group.

Index conventions (all arrays are object arrays of ``Fraction``):

* ``C[i, j, k]``     -- ``[e_i, e_j] = C[i, j, k] e_k``
* ``g[i, j]``        -- ``g(e_i, e_j)``
* ``A[k, j]``        -- a (1,1)-tensor, ``A e_j = A[k, j] e_k`` (matrix acting on columns)
* ``gamma[i, j, k]`` -- ``nabla_{e_i} e_j = gamma[i, j, k] e_k``
* ``riemann_13[i, j, k, l]`` -- ``R(e_i, e_j) e_k = riemann_13[i, j, k, l] e_l``
* ``riemann_04[i, j, k, l]`` -- ``g(R(e_i, e_j) e_k, e_l)``
* ``(0,2)``-tensor derivatives ``D[i, j, k] = (nabla_{e_i} T)(e_j, e_k)``

Because every field is left-invariant, component functions are constants and
all directional derivatives of components vanish.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import ratlin
from .errors import DimensionMismatch


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """Real Lie algebra given by structure constants in a fixed basis."""

    structure_constants: np.ndarray

    def __post_init__(self):
        C = ratlin.frac_array(self.structure_constants)
        n = C.shape[0]
        if C.shape != (n, n, n):
            raise DimensionMismatch(f"structure constants must be (n, n, n), got {C.shape}")
        for i, j in itertools.combinations_with_replacement(range(n), 2):
            for k in range(n):
                if C[i, j, k] != -C[j, i, k]:
                    raise ValueError(f"structure constants not antisymmetric at {(i, j, k)}")
        object.__setattr__(self, "structure_constants", C)

    @classmethod
    def from_brackets(cls, dim: int, brackets) -> LieAlgebra:
        """Build from ``(i, j, k, value)`` entries meaning ``[e_i, e_j] += value e_k``."""
        C = ratlin.zeros((dim, dim, dim))
        for i, j, k, v in brackets:
            v = ratlin.as_fraction(v)
            C[i, j, k] += v
            C[j, i, k] -= v
        return cls(C)

    @classmethod
    def abelian(cls, dim: int) -> LieAlgebra:
        return cls(ratlin.zeros((dim, dim, dim)))

    @property
    def dim(self) -> int:
        return self.structure_constants.shape[0]

    def bracket(self, x, y) -> np.ndarray:
        return ratlin.einsum("i,j,ijk->k", np.asarray(x, dtype=object),
                         np.asarray(y, dtype=object), self.structure_constants)

    def change_basis(self, P) -> LieAlgebra:
        """Structure constants in the basis ``e'_a = P[i, a] e_i``."""
        P = ratlin.frac_array(P)
        Pinv = ratlin.inverse(P)
        return LieAlgebra(ratlin.einsum("ia,jb,ijk,ck->abc", P, P, self.structure_constants, Pinv))


def check_jacobi(L: LieAlgebra) -> list[tuple[int, int, int]]:
    """Index triples ``(i, j, k)`` with ``i < j < k`` where the Jacobi identity fails."""
    C = L.structure_constants
    # J[i,j,k,m] = ([[e_i,e_j],e_k] + cyclic)^m
    J = (ratlin.einsum("ijl,lkm->ijkm", C, C)
         + ratlin.einsum("jkl,lim->ijkm", C, C)
         + ratlin.einsum("kil,ljm->ijkm", C, C))
    return [(i, j, k) for i, j, k in itertools.combinations(range(L.dim), 3)
            if not ratlin.is_zero(J[i, j, k])]


def _check_square(g, n):
    if g.shape != (n, n):
        raise DimensionMismatch(f"expected a {n}x{n} matrix, got shape {g.shape}")


def levi_civita(L: LieAlgebra, g) -> np.ndarray:
    """Levi-Civita connection coefficients of a left-invariant metric.

    Koszul formula with the derivative terms dropped:
    ``2 g(nabla_x y, z) = g([x,y],z) - g([y,z],x) - g([x,z],y)``.
    """
    g = ratlin.frac_array(g)
    _check_square(g, L.dim)
    ginv = ratlin.invert_symmetric(g)
    Cl = ratlin.einsum("ijk,km->ijm", L.structure_constants, g)
    lowered = (Cl - np.einsum("jmi->ijm", Cl) - np.einsum("imj->ijm", Cl)) / 2
    return ratlin.einsum("ijm,mk->ijk", lowered, ginv)


def torsion(L: LieAlgebra, gamma) -> np.ndarray:
    """``T(e_i, e_j)`` components; zero for a torsion-free connection."""
    return gamma - np.einsum("jik->ijk", gamma) - L.structure_constants


def riemann(L: LieAlgebra, g, gamma) -> tuple[np.ndarray, np.ndarray]:
    """Curvature ``R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_[x,y] z``.

    Returns ``(riemann_13, riemann_04)``.
    """
    g = ratlin.frac_array(g)
    r13 = (ratlin.einsum("jkm,iml->ijkl", gamma, gamma)
           - ratlin.einsum("ikm,jml->ijkl", gamma, gamma)
           - ratlin.einsum("ijm,mkl->ijkl", L.structure_constants, gamma))
    r04 = ratlin.einsum("ijkm,ml->ijkl", r13, g)
    return r13, r04


@dataclass(frozen=True, eq=False)
class CurvatureData:
    gamma: np.ndarray
    riemann_13: np.ndarray
    riemann_04: np.ndarray
    ricci: np.ndarray | None = None
    ricci_operator: np.ndarray | None = None
    tau: Fraction | None = None
    tau_star: Fraction | None = None
    tau_tilde: Fraction | None = None


def curvature(L: LieAlgebra, g, gamma=None) -> CurvatureData:
    """Connection and both variances of the Riemann tensor."""
    if gamma is None:
        gamma = levi_civita(L, g)
    r13, r04 = riemann(L, g, gamma)
    return CurvatureData(gamma=gamma, riemann_13=r13, riemann_04=r04)


def ricci_tensor(riemann_13) -> np.ndarray:
    """``rho(y, z) = trace(x -> R(x, y) z)``."""
    return np.einsum("ijki->jk", riemann_13)


def ricci_operator(rho, g) -> np.ndarray:
    """``Q`` with ``g(Q x, y) = rho(x, y)``."""
    return ratlin.invert_symmetric(g).dot(ratlin.frac_array(rho))


def scalar_curvature(L: LieAlgebra, g) -> Fraction:
    """``tau`` of ``g`` from a full pipeline run (connection, curvature, trace)."""
    g = ratlin.frac_array(g)
    cd = curvature(L, g)
    return ratlin.einsum("ij,ij->", ratlin.invert_symmetric(g), ricci_tensor(cd.riemann_13))


def ricci_data(L: LieAlgebra, curv: CurvatureData, g, phi, g_tilde) -> CurvatureData:
    """Fill in Ricci tensor, Ricci operator and the three scalar curvatures.

    ``tau_tilde`` is the scalar curvature of ``g_tilde`` recomputed from
    scratch with ``g_tilde`` as the metric, not inferred from ``tau_star``.
    """
    g = ratlin.frac_array(g)
    phi = ratlin.frac_array(phi)
    ginv = ratlin.invert_symmetric(g)
    rho = ricci_tensor(curv.riemann_13)
    tau = ratlin.einsum("ij,ij->", ginv, rho)
    tau_star = ratlin.einsum("ij,il,lj->", ginv, rho, phi)
    return CurvatureData(
        gamma=curv.gamma,
        riemann_13=curv.riemann_13,
        riemann_04=curv.riemann_04,
        ricci=rho,
        ricci_operator=ginv.dot(rho),
        tau=Fraction(tau),
        tau_star=Fraction(tau_star),
        tau_tilde=Fraction(scalar_curvature(L, g_tilde)),
    )


def covariant_derivative(T, gamma) -> np.ndarray:
    """``(nabla_i T)_{jk} = -gamma[i,j,l] T[l,k] - gamma[i,k,l] T[j,l]`` for a (0,2)-tensor."""
    T = ratlin.frac_array(T)
    return -ratlin.einsum("ijl,lk->ijk", gamma, T) - ratlin.einsum("ikl,jl->ijk", gamma, T)


def covariant_derivative_11(A, gamma) -> np.ndarray:
    """``D[i] = nabla_{e_i} A`` as a matrix in the same layout as ``A``."""
    A = ratlin.frac_array(A)
    return ratlin.einsum("mj,imk->ikj", A, gamma) - ratlin.einsum("ijm,km->ikj", gamma, A)


def covariant_derivative_vector(v, gamma) -> np.ndarray:
    """``N[i, l]``: the ``e_l`` component of ``nabla_{e_i} v`` for constant-component ``v``."""
    return ratlin.einsum("k,ikl->il", ratlin.frac_array(v), gamma)


def covariant_derivative_covector(w, gamma) -> np.ndarray:
    """``D[i, j] = (nabla_{e_i} w)(e_j)``."""
    return -ratlin.einsum("ijl,l->ij", gamma, ratlin.frac_array(w))


def lie_derivative_metric(v, g, gamma) -> np.ndarray:
    """``(L_v g)(x, y) = g(nabla_x v, y) + g(x, nabla_y v)``."""
    g = ratlin.frac_array(g)
    Nv = covariant_derivative_vector(v, gamma)
    lg = Nv.dot(g)
    return lg + lg.T


def lie_derivative_metric_brackets(L: LieAlgebra, v, g) -> np.ndarray:
    """Same tensor from ``(L_v g)(x, y) = -g([v, x], y) - g(x, [v, y])``.

    Independent of the connection; used as a cross-check.
    """
    g = ratlin.frac_array(g)
    ad = ratlin.einsum("i,ijk->jk", ratlin.frac_array(v), L.structure_constants)  # ad[j,k]: [v,e_j]^k
    lg = ad.dot(g)
    return -(lg + lg.T)
