"""
A Sasaki-like structure on a 5-dimensional Lie group
=====================================================

Builds the two-parameter family, checks the structure axioms and prints
the connection, curvature and Ricci data. Everything is an exact rational.
"""

from fractions import Fraction

import numpy as np

from acbmetric import Manifold, example_sasaki5, ratlin
from acbmetric.description import serialize_manifold
from acbmetric.structure import validate_structure

# %%
# The description is plain data: brackets, metric, phi, xi, eta.
desc = example_sasaki5(Fraction(1, 2), -3)
print(serialize_manifold(desc))

# %%
# Structure axioms, all of them reported at once.
s = desc.structure()
verdict = validate_structure(s)
print("valid:", verdict.valid)
for name, check in verdict.checks.items():
    print(f"  {name:20s} {'ok' if check.passed else check.witness}")

# %%
# Nonzero connection components nabla_{e_i} e_j.
m = Manifold(s)
for i in range(5):
    for j in range(5):
        v = m.gamma[i, j]
        if not ratlin.is_zero(v):
            terms = " + ".join(f"({ratlin.format_rational(c)}) e{k}" for k, c in enumerate(v) if c)
            print(f"nabla_e{i} e{j} = {terms}")

# %%
# Curvature: list R_ijkl with i < j, k < l up to pair symmetry.
R = m.curvature.riemann_04
for i, j, k, l in np.ndindex(R.shape):
    if i < j and k < l and (i, j) <= (k, l) and R[i, j, k, l]:
        print(f"R_{i}{j}{k}{l} = {ratlin.format_rational(R[i, j, k, l])}")

# %%
# Ricci tensor is 4 eta(x)eta, so the scalar curvatures are easy to read off.
c = m.curvature
print("nonzero rho:", {(i, j): str(v) for (i, j), v in np.ndenumerate(m.rho) if v})
print("tau, tau*, tau~ =", c.tau, c.tau_star, c.tau_tilde)
print("Sasaki-like:", m.sasaki.holds)
print("consequences:", m.sasaki.consequences)

# %%
# The parameters p and q never reach the curvature.
for p, q in [(0, 0), (2, -3), (Fraction(1, 2), Fraction(5, 7))]:
    other = Manifold(example_sasaki5(p, q).structure())
    print(f"({p}, {q}) same R:", (other.curvature.riemann_04 == R).all())
