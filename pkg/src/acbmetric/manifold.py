"""Cached evaluation of the whole geometric pipeline for one structure."""

from __future__ import annotations

from functools import cached_property

from . import lie, ratlin
from .solitons import einstein_like_fit
from .structure import (
    ACBStructure,
    associated_metric,
    fundamental_tensor,
    is_sasaki_like,
)


class Manifold:
    """A Lie group with a left-invariant almost contact B-metric structure.

    Every derived quantity is computed on first access and cached; the
    underlying structure is never mutated.
    """

    def __init__(self, structure: ACBStructure):
        self.structure = structure

    @property
    def n(self) -> int:
        return self.structure.n

    @cached_property
    def gamma(self):
        return lie.levi_civita(self.structure.algebra, self.structure.g)

    @cached_property
    def g_tilde(self):
        return associated_metric(self.structure)

    @cached_property
    def curvature(self) -> lie.CurvatureData:
        s = self.structure
        base = lie.curvature(s.algebra, s.g, self.gamma)
        return lie.ricci_data(s.algebra, base, s.g, s.phi, self.g_tilde)

    @property
    def rho(self):
        return self.curvature.ricci

    @property
    def Q(self):
        return self.curvature.ricci_operator

    @cached_property
    def fundamental(self):
        return fundamental_tensor(self.structure, self.gamma)

    @cached_property
    def sasaki(self):
        return is_sasaki_like(self.structure, self.gamma, curv=self.curvature)

    @cached_property
    def nabla_rho(self):
        return lie.covariant_derivative(self.rho, self.gamma)

    @cached_property
    def nabla_Q(self):
        return lie.covariant_derivative_11(self.Q, self.gamma)

    @cached_property
    def einstein(self):
        c = self.curvature
        return einstein_like_fit(
            c.ricci, self.structure.g, self.g_tilde, self.structure.eta,
            sasaki_n=self.n if self.sasaki.holds else None,
            tau=c.tau, tau_tilde=c.tau_tilde,
        )

    def lie_derivative(self, v):
        return lie.lie_derivative_metric(ratlin.frac_array(v), self.structure.g, self.gamma)
