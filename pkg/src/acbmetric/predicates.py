"""Curvature conditions on the Ricci tensor, decided componentwise.

Verdicts are computed directly from the tensors.  Where an equivalence with
the Einstein condition is known, the prediction is stored separately in
``einstein_equivalent`` so callers can compare the two; it is never used to
shortcut a verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import ratlin
from .errors import NotApplicable
from .structure import ACBStructure, contact_basis


@dataclass(frozen=True, eq=False)
class PredicateVerdict:
    name: str
    holds: bool
    witness: object = None
    einstein_equivalent: bool | None = None
    extra: dict = field(default_factory=dict)

    def __bool__(self):
        return self.holds


def _verdict(name, residual, einstein=None, **extra) -> PredicateVerdict:
    hit = ratlin.first_nonzero(residual)
    return PredicateVerdict(name, hit is None, hit, einstein, extra)


def _restrict(T, vectors):
    """Evaluate a (0,3)-tensor on all triples drawn from ``vectors``."""
    if not vectors:
        return ratlin.zeros((0, 0, 0))
    U = np.array(vectors, dtype=object)  # U[a, i]
    return np.einsum("ijk,ai,bj,ck->abc", T, U, U, U)


def ricci_parallelism_report(nabla_rho, s: ACBStructure, einstein=None) -> dict:
    """Five parallelism-type conditions on ``nabla rho``.

    ``nabla_rho[i, j, k] = (nabla_{e_i} rho)(e_j, e_k)``.  For ``eta_parallel``
    all three arguments range over a basis of ``ker eta``; the witness indexes
    that basis.
    """
    T = ratlin.frac_array(nabla_rho)
    return {
        "locally_symmetric": _verdict("locally_symmetric", T, einstein),
        "eta_parallel": _verdict("eta_parallel", _restrict(T, contact_basis(s))),
        "parallel_along_xi": _verdict("parallel_along_xi", np.einsum("i,ijk->jk", s.xi, T)),
        "cyclic_parallel": _verdict(
            "cyclic_parallel",
            T + np.einsum("jki->ijk", T) + np.einsum("kij->ijk", T),
            einstein,
        ),
        "codazzi": _verdict("codazzi", T - np.einsum("jik->ijk", T), einstein),
    }


def r_xi_action_on_rho(riemann_13, rho, s: ACBStructure, einstein=None) -> PredicateVerdict:
    """``rho(R(xi,x)y, z) + rho(y, R(xi,x)z) = 0`` on all basis triples ``(x, y, z)``."""
    rho = ratlin.frac_array(rho)
    R_xi = np.einsum("a,aijl->ijl", s.xi, riemann_13)  # R(xi,e_i)e_j = R_xi[i,j,l] e_l
    T = np.einsum("ijl,lk->ijk", R_xi, rho) + np.einsum("ikl,jl->ijk", R_xi, rho)
    return _verdict("r_xi_action", T, einstein)


def ricci_phi_symmetry(nabla_Q, s: ACBStructure, scope: str = "global", einstein=None) -> PredicateVerdict:
    """``phi^2 (nabla_x Q) y = 0``.

    ``nabla_Q[i]`` is the matrix of ``nabla_{e_i} Q``.  With ``scope="local"``
    both ``x`` and ``y`` range over a basis of ``ker eta`` instead of the full
    basis; the witness then indexes that basis.
    """
    if scope not in ("global", "local"):
        raise ValueError(f"scope must be 'global' or 'local', not {scope!r}")
    phi2 = s.phi.dot(s.phi)
    M = np.einsum("kl,ilj->ikj", phi2, ratlin.frac_array(nabla_Q))  # M[i,k,j]: phi^2 (nabla_i Q) e_j
    if scope == "global":
        return _verdict("phi_symmetry_global", M, einstein)
    U = contact_basis(s)
    if not U:
        return _verdict("phi_symmetry_local", ratlin.zeros((0,)))
    Ua = np.array(U, dtype=object)
    R = np.einsum("ai,ikj,bj->abk", Ua, M, Ua)
    return _verdict("phi_symmetry_local", R)


FORM_KINDS = ("pseudo", "special_weakly")


def recurrent_forms_system(nabla_rho, rho, kind):
    """Linear system for the 1-forms of the two recurrence-type conditions.

    ``pseudo``: ``(nabla_x rho)(y,z) = (alpha+beta)(x) rho(y,z) + alpha(y) rho(x,z)
    + alpha(z) rho(x,y)``, unknowns ``(alpha, beta)``.
    ``special_weakly``: ``2 alpha(x) rho(y,z) + alpha(y) rho(x,z) + alpha(z) rho(x,y)``,
    unknown ``alpha``.
    Rows are indexed by ``(i, j, k)`` in C order.
    """
    rho = ratlin.frac_array(rho)
    d = rho.shape[0]
    one = ratlin.identity(d)
    tail = np.einsum("mj,ik->ijkm", one, rho) + np.einsum("mk,ij->ijkm", one, rho)
    head = np.einsum("mi,jk->ijkm", one, rho)
    if kind == "pseudo":
        A = np.concatenate([head + tail, head], axis=3)
    elif kind == "special_weakly":
        A = 2 * head + tail
    else:
        raise ValueError(f"kind must be one of {FORM_KINDS}")
    return A.reshape(d**3, -1), ratlin.frac_array(nabla_rho).reshape(-1)


def _nonvanishing_point(sol: ratlin.AffineSolutionSpace, blocks):
    """A solution on which every coordinate block is nonzero, or ``None``.

    A block that does not vanish on the whole solution space vanishes on an
    affine subspace of dimension at most one inside the plane spanned by two
    chosen directions, so a 4x4 integer grid always avoids two such blocks.
    """
    p = np.array(sol.particular, dtype=object)
    basis = [np.array(v, dtype=object) for v in sol.nullspace_basis]
    dirs = []
    for blk in blocks:
        if any(p[blk] != 0):
            continue
        d = next((v for v in basis if any(v[blk] != 0)), None)
        if d is None:
            return None
        dirs.append(d)
    dirs += [ratlin.zeros(len(p))] * (2 - len(dirs))
    for s_ in range(4):
        for t in range(4):
            x = p + s_ * dirs[0] + t * dirs[1]
            if all(any(x[blk] != 0) for blk in blocks):
                return x
    raise AssertionError("grid search failed")


def recurrent_forms_solve(nabla_rho, rho, kind: str, einstein=None) -> PredicateVerdict:
    """Solve for the 1-forms exactly and decide whether non-vanishing ones exist.

    ``extra["solution"]`` holds the full affine solution space, vanishing
    solutions included; ``extra["consistent"]`` says whether any forms at all
    satisfy the identity.  ``holds`` additionally requires every form to be
    non-vanishing (at least one nonzero component).
    """
    rho = ratlin.frac_array(rho)
    if ratlin.is_zero(rho):
        raise NotApplicable("the Ricci tensor vanishes")
    d = rho.shape[0]
    A, b = recurrent_forms_system(nabla_rho, rho, kind)
    sol = ratlin.solve_affine(A, b)
    name = f"{kind}_ricci_symmetric"
    blocks = [slice(0, d), slice(d, 2 * d)] if kind == "pseudo" else [slice(0, d)]
    extra = {"consistent": sol.consistent, "solution": sol}
    if not sol.consistent:
        y = ratlin.inconsistency_certificate(A, b)
        rows = [tuple(int(t) for t in np.unravel_index(r, (d, d, d))) for r in range(len(y)) if y[r] != 0]
        witness = {"reason": "inconsistent", "rows": rows, "certificate": y}
        return PredicateVerdict(name, False, witness, einstein, extra)
    x = _nonvanishing_point(sol, blocks)
    if x is None:
        return PredicateVerdict(name, False, {"reason": "forms forced to vanish"}, einstein, extra)
    forms = {"alpha": x[blocks[0]]}
    if kind == "pseudo":
        forms["beta"] = x[blocks[1]]
    extra["forms"] = forms
    return PredicateVerdict(name, True, None, einstein, extra)


def q_dot_r_zero(riemann_04, Q, *, rho=None, sasaki: bool = False) -> PredicateVerdict:
    """``R(x,y,z,Qw) - R(Qx,y,z,w) - R(x,Qy,z,w) - R(x,y,Qz,w) = 0``.

    With ``rho`` given, ``extra["trace_residual"]`` holds
    ``rho(Qy, z) + rho(y, Qz)``.  When the condition holds on a Sasaki-like
    structure, ``extra["excludes_vertical_soliton"]`` is set.
    """
    R = ratlin.frac_array(riemann_04)
    Q = ratlin.frac_array(Q)
    T = (np.einsum("ijkm,ml->ijkl", R, Q)
         - np.einsum("mjkl,mi->ijkl", R, Q)
         - np.einsum("imkl,mj->ijkl", R, Q)
         - np.einsum("ijml,mk->ijkl", R, Q))
    verdict = _verdict("q_dot_r_zero", T)
    verdict.extra["excludes_vertical_soliton"] = bool(sasaki and verdict.holds)
    if rho is not None:
        verdict.extra["trace_residual"] = ricci_trace_residual(rho, Q)
    return verdict


def ricci_trace_residual(rho, Q) -> np.ndarray:
    """``rho(Q y, z) + rho(y, Q z)``."""
    rho = ratlin.frac_array(rho)
    Q = ratlin.frac_array(Q)
    return Q.T.dot(rho) + rho.dot(Q)
