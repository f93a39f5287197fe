"""
Curvature predicates on the 5-dimensional example
==================================================

Every predicate is decided from its definition, with a violating index
tuple when it fails. The example is not Einstein, so most of them fail.
"""

from fractions import Fraction

from acbmetric import Manifold, example_sasaki5, lie
from acbmetric import predicates as P
from acbmetric import solitons as S
from acbmetric.analysis import format_witness

m = Manifold(example_sasaki5(Fraction(1, 2), -3).structure())
s = m.structure

# %%
verdicts = dict(P.ricci_parallelism_report(m.nabla_rho, s))
verdicts["r_xi_action"] = P.r_xi_action_on_rho(m.curvature.riemann_13, m.rho, s)
verdicts["phi_symmetry_local"] = P.ricci_phi_symmetry(m.nabla_Q, s, "local")
verdicts["phi_symmetry_global"] = P.ricci_phi_symmetry(m.nabla_Q, s, "global")
for kind in P.FORM_KINDS:
    verdicts[kind] = P.recurrent_forms_solve(m.nabla_rho, m.rho, kind)
verdicts["q_dot_r_zero"] = P.q_dot_r_zero(m.curvature.riemann_04, m.Q, rho=m.rho, sasaki=True)

for name, v in verdicts.items():
    print(f"{name:22s} {str(v.holds):5s} {format_witness(v.witness) if not v.holds else ''}")

# %%
# Swap in rho = 4g on the same connection. This is a stand-in: R is not
# recomputed from it, but every statement about nabla rho only needs the
# connection and the shape of rho.
rho = S.synthetic_ricci(s, -4, 1, -1)
e = S.einstein_like_fit(rho, s.g, m.g_tilde, s.eta)
rep = P.ricci_parallelism_report(lie.covariant_derivative(rho, m.gamma), s)
print("stand-in is Einstein:", e.is_einstein)
print({k: v.holds for k, v in rep.items()})
