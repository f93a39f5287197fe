"""Full analysis of one manifold description and its two report formats."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import lie, predicates, ratlin, solitons
from .description import ManifoldDescription
from .errors import DegenerateCase, SingularMetric
from .manifold import Manifold
from .structure import (
    fundamental_tensor_identities,
    is_cosymplectic,
    validate_structure,
)


def format_value(value) -> str:
    """Exact text form used in both report formats."""
    if value is None:
        return "none"
    if isinstance(value, bool | np.bool_):
        return "true" if value else "false"
    if isinstance(value, Fraction | int):
        return ratlin.format_rational(value)
    if isinstance(value, str):
        return value
    if isinstance(value, tuple | list | np.ndarray):
        return "(" + ", ".join(format_value(v) for v in value) + ")"
    raise TypeError(f"cannot format {type(value).__name__}")


@dataclass
class AnalysisReport:
    """Ordered report entries plus the theorem consistency checks.

    ``entries`` holds ``(section, key, value)`` in the order they were
    produced; ``checks`` maps check names to booleans.
    """

    label: str
    entries: list = field(default_factory=list)
    checks: dict = field(default_factory=dict)

    def put(self, section, key, value):
        self.entries.append((section, key, format_value(value)))

    def check(self, name, ok):
        self.checks[name] = bool(ok)

    def value(self, section, key) -> str:
        for sec, k, v in self.entries:
            if (sec, k) == (section, key):
                return v
        raise KeyError(f"{section}.{key}")

    @property
    def failed(self) -> list[str]:
        return sorted(name for name, ok in self.checks.items() if not ok)

    @property
    def passed(self) -> bool:
        return not self.failed

    def machine(self) -> str:
        lines = [f"{sec}.{key} = {val}" for sec, key, val in self.entries]
        lines += [f"check.{name} = {'PASS' if ok else 'FAIL'}" for name, ok in self.checks.items()]
        lines.append(f"summary.checks_failed = {len(self.failed)}")
        lines.append(f"summary.checks_total = {len(self.checks)}")
        return "\n".join(sorted(lines)) + "\n"

    def text(self) -> str:
        out = [f"Analysis of {self.label or 'unnamed manifold'}"]
        current = None
        for sec, key, val in self.entries:
            if sec != current:
                out.append("")
                out.append(f"[{sec}]")
                current = sec
            out.append(f"  {key}: {val}")
        out.append("")
        out.append("[theorem checks]")
        width = max((len(n) for n in self.checks), default=0)
        for name, ok in self.checks.items():
            out.append(f"  {name.ljust(width)}  {'PASS' if ok else 'FAIL'}")
        out.append("")
        out.append(f"{len(self.checks) - len(self.failed)}/{len(self.checks)} checks passed")
        return "\n".join(out) + "\n"


def _nonzero(arr, keep=lambda idx: True):
    for idx in np.ndindex(arr.shape):
        if arr[idx] != 0 and keep(idx):
            yield "".join(str(i) for i in idx), arr[idx]


def _connection_checks(rep, L, g, gamma, curv):
    rep.check("connection.torsion_free", ratlin.is_zero(lie.torsion(L, gamma)))
    rep.check("connection.metric_compatible", ratlin.is_zero(lie.covariant_derivative(g, gamma)))
    R = curv.riemann_04
    rep.check("curvature.antisymmetric_first_pair", ratlin.is_zero(R + np.einsum("jikl->ijkl", R)))
    rep.check("curvature.antisymmetric_second_pair", ratlin.is_zero(R + np.einsum("ijlk->ijkl", R)))
    rep.check("curvature.pair_symmetry", ratlin.is_zero(R - np.einsum("klij->ijkl", R)))
    rep.check("curvature.first_bianchi", ratlin.is_zero(
        R + np.einsum("jkil->ijkl", R) + np.einsum("kijl->ijkl", R)))
    rep.check("curvature.ricci_symmetric", ratlin.is_symmetric(curv.ricci))


def run_analysis(desc: ManifoldDescription, potentials=(1,), potential_vectors=()) -> AnalysisReport:
    """Run every module on ``desc`` and collect values and consistency checks.

    ``potentials`` are rational ``k`` for vertical potentials ``k xi``;
    ``potential_vectors`` are arbitrary constant vectors, analyzed but flagged
    when they are not vertical.
    """
    rep = AnalysisReport(desc.label)
    s = desc.structure()
    rep.put("input", "dim", desc.dim)
    rep.put("input", "label", desc.label or "none")

    jac = lie.check_jacobi(s.algebra)
    rep.put("structure", "jacobi", not jac)
    verdict = validate_structure(s)
    for name, chk in verdict.checks.items():
        rep.put("structure", f"axiom.{name}", chk.passed)
    rep.put("structure", "valid", verdict.valid)
    if not verdict.valid:
        rep.put("structure", "failures", ", ".join(verdict.failures))
        for sec in ("connection", "curvature", "fundamental", "einstein", "soliton",
                    "predicates", "parallel"):
            rep.put(sec, "status", "skipped")
        rep.check("structure.valid", False)
        return rep
    rep.check("structure.valid", True)

    m = Manifold(s)
    n = m.n
    try:
        g_tilde = m.g_tilde
    except SingularMetric as exc:
        rep.put("structure", "associated_metric", f"singular ({exc})")
        rep.check("structure.associated_metric_nondegenerate", False)
        return rep
    rep.put("structure", "associated_metric.signature", tuple(ratlin.signature(g_tilde)))
    rep.check("structure.associated_metric_signature",
              tuple(ratlin.signature(g_tilde)) == (n + 1, n, 0))

    gamma, curv = m.gamma, m.curvature
    for key, val in _nonzero(gamma):
        rep.put("connection", f"gamma.{key}", val)
    _connection_checks(rep, s.algebra, s.g, gamma, curv)
    for key, val in _nonzero(curv.riemann_04, lambda t: t[0] < t[1] and t[2] < t[3]):
        rep.put("curvature", f"R.{key}", val)
    for key, val in _nonzero(curv.ricci, lambda t: t[0] <= t[1]):
        rep.put("curvature", f"rho.{key}", val)
    rep.put("curvature", "tau", curv.tau)
    rep.put("curvature", "tau_star", curv.tau_star)
    rep.put("curvature", "tau_tilde", curv.tau_tilde)

    ft = m.fundamental
    for name, ok in fundamental_tensor_identities(s, ft, gamma).items():
        rep.check(f"fundamental.{name}", ok)
    cosym = is_cosymplectic(ft)
    sasaki = m.sasaki
    rep.put("fundamental", "theta", ft.theta)
    rep.put("fundamental", "theta_star", ft.theta_star)
    rep.put("fundamental", "omega", ft.omega)
    rep.put("fundamental", "cosymplectic", cosym)
    rep.put("fundamental", "sasaki_like", sasaki.holds)
    rep.put("fundamental", "class", "F0" if cosym else "F4 (via Sasaki-like)" if sasaki.holds else "unclassified")
    if sasaki.holds:
        for name, ok in sasaki.consequences.items():
            rep.check(f"sasaki.{name}", ok)
    else:
        rep.put("fundamental", "sasaki_witness", format_witness(sasaki.witness))

    ein = m.einstein
    rep.put("einstein", "consistent", ein.consistent)
    rep.put("einstein", "unique", ein.unique)
    rep.put("einstein", "a", ein.a)
    rep.put("einstein", "b", ein.b)
    rep.put("einstein", "c", ein.c)
    rep.put("einstein", "classification", ein.classification)
    for name, ok in ein.checks.items():
        rep.check(f"einstein.{name}", ok)

    any_vertical = False
    xi_fit = None
    for k in potentials:
        k = ratlin.as_fraction(k)
        sec = f"soliton.k={ratlin.format_rational(k)}"
        if sasaki.holds:
            vp = solitons.vertical_potential_analysis(k, s, gamma, m.rho, g_tilde=g_tilde, sasaki=True)
            fit = vp.fit
            for name, ok in vp.checks.items():
                rep.check(f"{sec}.{name}", ok)
        else:
            fit = solitons.soliton_fit(k * s.xi, s, gamma, m.rho, g_tilde=g_tilde, sasaki=False)
            if cosym:
                rep.check(f"{sec}.cosymplectic_reduces_to_einstein_like",
                          not ratlin.is_zero(k * s.xi) or fit.consistent == ein.consistent)
        _put_fit(rep, sec, fit)
        any_vertical = any_vertical or fit.consistent
        if k == 1:
            xi_fit = fit

    for idx, v in enumerate(potential_vectors):
        v = ratlin.frac_array(v)
        sec = f"soliton.vector{idx}"
        kv = solitons.vertical_factor(s, v)
        fit = solitons.soliton_fit(v, s, gamma, m.rho, g_tilde=g_tilde, sasaki=sasaki.holds, einstein=ein)
        rep.put(sec, "potential", v)
        rep.put(sec, "vertical", kv is not None)
        rep.put(sec, "eta_of_potential", s.eta.dot(v))
        if kv is None:
            rep.put(sec, "note", "non-vertical potential: outside the vertical-potential hypotheses")
        _put_fit(rep, sec, fit)
        for name, ok in fit.checks.items():
            rep.check(f"{sec}.{name}", ok)

    if sasaki.holds and xi_fit is not None and xi_fit.consistent and xi_fit.unique:
        _xi_soliton_checks(rep, m, xi_fit)

    _predicates(rep, m, any_vertical, xi_fit)

    space = solitons.parallel_symmetric_space(gamma, s.g)
    rep.put("parallel", "dimension", space.dimension)
    rep.check("parallel.contains_metric", space.contains(s.g))
    if sasaki.holds:
        rep.check("parallel.sasaki_dimension_one", space.dimension == 1)
    return rep


def _put_fit(rep, sec, fit):
    rep.put(sec, "consistent", fit.consistent)
    rep.put(sec, "unique", fit.unique)
    rep.put(sec, "lambda", fit.lam)
    rep.put(sec, "mu", fit.mu)
    rep.put(sec, "nu", fit.nu)
    rep.put(sec, "kind", fit.kind)


def _xi_soliton_checks(rep, m: Manifold, fit):
    s, n, curv = m.structure, m.n, m.curvature
    cor = solitons.corollary_scalar_relations(fit, curv.tau, curv.tau_tilde, n, m.einstein)
    for name, ok in cor.passed.items():
        rep.check(f"corollary.{name}", ok)
    closed = solitons.nabla_rho_closed_form(fit, s)
    rep.check("nabla_rho.closed_form", ratlin.is_zero(closed - m.nabla_rho))
    try:
        c1, c2 = solitons.recurrence_coefficients(fit.lam, fit.mu, n)
    except DegenerateCase:
        rep.put("nabla_rho", "recurrence", "degenerate: (lambda, mu) = (0, 1)")
    else:
        rep.put("nabla_rho", "recurrence.c1", c1)
        rep.put("nabla_rho", "recurrence.c2", c2)
        rec = solitons.recurrence_tensor(fit.lam, fit.mu, n, m.rho, s)
        rep.check("nabla_rho.recurrence", ratlin.is_zero(rec - m.nabla_rho))
    h = solitons.soliton_tensor_h(s, m.gamma, m.rho, fit.mu, fit.nu, g_tilde=m.g_tilde, sasaki=True)
    rep.put("h_tensor", "parallel", h.parallel)
    rep.put("h_tensor", "lambda", h.lam)
    for name, ok in h.checks.items():
        rep.check(f"h_tensor.{name}", ok)
    rep.check("h_tensor.lambda_matches_fit", h.parallel and h.lam == fit.lam)


def _predicates(rep, m: Manifold, any_vertical, xi_fit):
    s, curv = m.structure, m.curvature
    einstein = m.einstein.is_einstein
    sasaki = m.sasaki.holds
    par = predicates.ricci_parallelism_report(m.nabla_rho, s, einstein)
    verdicts = dict(par)
    verdicts["r_xi_action"] = predicates.r_xi_action_on_rho(curv.riemann_13, m.rho, s, einstein)
    verdicts["phi_symmetry_global"] = predicates.ricci_phi_symmetry(m.nabla_Q, s, "global", einstein)
    verdicts["phi_symmetry_local"] = predicates.ricci_phi_symmetry(m.nabla_Q, s, "local")
    forms = {}
    if not ratlin.is_zero(m.rho):
        for kind in predicates.FORM_KINDS:
            forms[kind] = verdicts[f"{kind}_ricci_symmetric"] = predicates.recurrent_forms_solve(
                m.nabla_rho, m.rho, kind, einstein)
    else:
        for kind in predicates.FORM_KINDS:
            rep.put("predicates", f"{kind}_ricci_symmetric", "not applicable (rho = 0)")
    qr = predicates.q_dot_r_zero(curv.riemann_04, m.Q, rho=m.rho, sasaki=sasaki)
    verdicts["q_dot_r_zero"] = qr
    for name, v in verdicts.items():
        rep.put("predicates", name, v.holds)
        if not v.holds and v.witness is not None:
            rep.put("predicates", f"{name}.witness", format_witness(v.witness))
    for kind, v in forms.items():
        rep.put("predicates", f"{kind}_ricci_symmetric.forms_consistent", v.extra["consistent"])
        rep.put("predicates", f"{kind}_ricci_symmetric.solution_dimension", v.extra["solution"].dimension)
    rep.put("predicates", "q_dot_r_zero.excludes_vertical_soliton", qr.extra["excludes_vertical_soliton"])
    rep.put("predicates", "q_dot_r_zero.trace_residual_zero", ratlin.is_zero(qr.extra["trace_residual"]))

    for name, v in verdicts.items():
        if not v.holds and v.witness is not None and name in par:
            (idx, val) = v.witness
            rep.check(f"predicates.{name}.witness_nonzero", val != 0)
    if not (sasaki and any_vertical):
        return
    # Equivalences that hold on Sasaki-like manifolds carrying a vertical soliton.
    rep.check("predicates.eta_parallel", par["eta_parallel"].holds)
    rep.check("predicates.parallel_along_xi", par["parallel_along_xi"].holds)
    for name in ("locally_symmetric", "cyclic_parallel", "codazzi", "phi_symmetry_global", "r_xi_action"):
        rep.check(f"predicates.{name}_iff_einstein", verdicts[name].holds == einstein)
    rep.check("predicates.phi_symmetry_local", verdicts["phi_symmetry_local"].holds)
    for kind, v in forms.items():
        rep.check(f"predicates.{kind}_forms_consistent_iff_einstein", v.extra["consistent"] == einstein)
        rep.check(f"predicates.{kind}_no_nonvanishing_forms", not v.holds)
    rep.check("predicates.q_dot_r_excludes_vertical_soliton", not qr.holds)
    if xi_fit is not None and xi_fit.consistent and xi_fit.unique:
        target = (xi_fit.lam, xi_fit.mu, xi_fit.nu) == (-2 * m.n, 1, -1)
        rep.check("predicates.locally_symmetric_iff_einstein_constants", par["locally_symmetric"].holds == target)


def format_witness(w) -> str:
    """Compact exact text for a verdict witness."""
    if isinstance(w, dict):
        if w.get("reason") == "inconsistent":
            return f"inconsistent, rows {format_value([format_value(r) for r in w['rows'][:3]])}"
        return w.get("reason", str(w))
    idx, val = w
    return f"{format_value(tuple(int(i) for i in idx))} -> {format_value(val)}"
