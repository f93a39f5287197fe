"""
Einstein-like constants and Ricci-like solitons
===============================================

Fits rho against g, g~ and eta(x)eta, then solves the soliton equation for
vertical potentials v = k xi over a few rational k.
"""

from fractions import Fraction

from acbmetric import Manifold, example_sasaki5
from acbmetric import solitons as S


def show(*xs):
    return "(" + ", ".join(map(str, xs)) + ")"


m = Manifold(example_sasaki5(Fraction(1, 2), -3).structure())
s = m.structure

# %%
# rho = a g + b g~ + c eta(x)eta
e = m.einstein
print("(a, b, c) =", show(e.a, e.b, e.c), "->", e.classification)

# %%
# 1/2 L_xi g + rho + lam g + mu g~ + nu eta(x)eta = 0
fit = S.soliton_fit(s.xi, s, m.gamma, m.rho, einstein=e)
print("(lam, mu, nu) =", show(fit.lam, fit.mu, fit.nu), fit.kind)
print("relations:", fit.checks)

# %%
# The same constants from the scalar curvatures alone.
c = m.curvature
cor = S.corollary_scalar_relations(fit, c.tau, c.tau_tilde, m.n, e)
print("predicted from tau, tau~:", {k: str(v) for k, v in cor.predicted.items()}, "holds:", cor.holds)

# %%
# Vertical potentials: mu follows k and lam + nu absorbs the rest.
for k in (1, 2, -1, Fraction(3, 2), 0):
    r = S.vertical_potential_analysis(k, s, m.gamma, m.rho)
    print(f"k = {k!s:>4}: (lam, mu, nu) = {show(r.fit.lam, r.fit.mu, r.fit.nu)}",
          "checks ok" if all(r.checks.values()) else r.checks)

# %%
# Parallel symmetric tensors are multiples of g, which pins down h.
space = S.parallel_symmetric_space(m.gamma, s.g)
print("dim of parallel symmetric 2-tensors:", space.dimension)
for mu, nu in [(1, -5), (1, -4)]:
    h = S.soliton_tensor_h(s, m.gamma, m.rho, mu, nu)
    print(f"h for (mu, nu) = ({mu}, {nu}): zero={not h.h.any()} parallel={h.parallel}")
