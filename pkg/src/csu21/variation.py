"""Chern-Simons variation along paths of flat torus connections.

A path t -> A(t) of normal-form connections (one family, parameters
varying with t, no dt-component) changes the Chern-Simons invariant of a
filled-in 3-manifold by a boundary integral.  Because the coefficient
matrices are linear in the parameters and commute within each family,
the tr(A ∧ dA + (2/3) A ∧ A ∧ A) density reduces to

    f(t) = tr(cy(t) cx'(t) - cx(t) cy'(t)) / (8 pi^2)

and the CS change is the integral of f over [0, 1].  Carrying out the
trace per family gives closed Wronskian formulas:

    elliptic     : 1/2 sum_i int (a_i b_i' - a_i' b_i) dt
    loxodromic   : 1/2 int (th1 ta1' - th1' ta1) + int (th2 ta2' - th2' ta2)
                   + 1/(4 pi^2) int (u' v - u v') dt
    parabolic c1 : 3/2 int (alpha beta' - alpha' beta) dt
    parabolic c2 : int (th1 ta1' - th1' ta1) + 1/2 int (th2 ta2' - th2' ta2) dt

``cs_delta_closed`` evaluates these formulas, ``cs_delta_quadrature``
integrates the trace density by composite Simpson; agreement of the two
routes is the module's main cross-check.

Parameters move along paths of three kinds: linear between endpoints,
polynomial in t (ascending coefficients), or explicitly sampled on a
uniform grid.  Linear and polynomial paths integrate exactly; sampled
paths are differentiated by second-order finite differences and both
routes then run on the shared sample grid, so they see identical data.

The module also evaluates the change of CS under the basic gauge loops
h(x, y) = diag(e^{2 pi i (mx+ny)}, e^{-2 pi i (mx+ny)}, 1) on an
elliptic connection: the closed form m (b1 - b2)/2 - n (a1 - a2)/2 and a
direct boundary-torus integral of tr(g^{-1} A g ∧ g^{-1} dg) for the
(m, n) = (1, 0) loop.

CS values of closed manifolds live in R/Z; ``mod_z`` reduces exact
Fractions exactly and floats in double precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

import numpy as np
from numpy.polynomial import Polynomial
from scipy.integrate import simpson

from .normal_forms import (
    ELLIPTIC,
    FAMILIES,
    FAMILY_PARAMS,
    FAMILY_X_PARAMS,
    FAMILY_Y_PARAMS,
    EllipticNF,
    LoxodromicNF,
    NormalFormConnection,
    ParabolicC1NF,
    ParabolicC2NF,
    connection_coeffs,
    direction_matrix,
)

EIGHT_PI_SQ = 8.0 * math.pi**2

MIN_SAMPLES = 33


class FamilyMismatch(ValueError):
    """Path parameters do not belong to the declared normal-form family."""


@dataclass(frozen=True)
class LinearParam:
    """Parameter moving linearly from ``start`` to ``end`` over [0, 1]."""

    start: float
    end: float


@dataclass(frozen=True)
class PolyParam:
    """Polynomial parameter path, ascending coefficients in t."""

    coeffs: tuple[float, ...]


@dataclass(frozen=True)
class SampledParam:
    """Parameter sampled on the uniform grid linspace(0, 1, len(values))."""

    values: tuple[float, ...]

    def __post_init__(self):
        if len(self.values) < MIN_SAMPLES:
            raise ValueError(f"sampled parameter needs >= {MIN_SAMPLES} values, got {len(self.values)}")


ParamCurve = Union[LinearParam, PolyParam, SampledParam]

_ZERO = LinearParam(0.0, 0.0)


@dataclass(frozen=True)
class ConnectionPath:
    """A one-parameter family of normal-form connections of one family.

    Parameters absent from ``params`` stay at zero.  All sampled
    parameters must share one grid length.
    """

    family: str
    params: Mapping[str, ParamCurve]

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise FamilyMismatch(f"unknown family {self.family!r}")
        allowed = set(FAMILY_PARAMS[self.family])
        stray = sorted(set(self.params) - allowed)
        if stray:
            raise FamilyMismatch(
                f"parameters {stray} do not belong to family {self.family!r} "
                f"(expected a subset of {sorted(allowed)})"
            )

    def sample_grid(self) -> np.ndarray | None:
        """Shared grid of the sampled parameters, or None if all are smooth."""
        sizes = {len(c.values) for c in self.params.values() if isinstance(c, SampledParam)}
        if not sizes:
            return None
        if len(sizes) > 1:
            raise ValueError(f"sampled parameters disagree on grid size: {sorted(sizes)}")
        return np.linspace(0.0, 1.0, sizes.pop())

    def _curve(self, name: str) -> ParamCurve:
        return self.params.get(name, _ZERO)

    def values_on(self, t: np.ndarray, name: str) -> np.ndarray:
        c = self._curve(name)
        if isinstance(c, LinearParam):
            return c.start + (c.end - c.start) * t
        if isinstance(c, PolyParam):
            return Polynomial(c.coeffs)(t)
        vals = np.asarray(c.values, dtype=float)
        if len(vals) != len(t):
            raise ValueError("sampled parameter does not match the evaluation grid")
        return vals

    def derivs_on(self, t: np.ndarray, name: str) -> np.ndarray:
        c = self._curve(name)
        if isinstance(c, LinearParam):
            return np.full_like(t, c.end - c.start)
        if isinstance(c, PolyParam):
            return Polynomial(c.coeffs).deriv()(t)
        vals = np.asarray(c.values, dtype=float)
        if len(vals) != len(t):
            raise ValueError("sampled parameter does not match the evaluation grid")
        return np.gradient(vals, t[1] - t[0], edge_order=2)

    def at(self, t: float) -> NormalFormConnection:
        """Normal form at parameter time t (smooth parameter kinds only)."""
        tt = np.asarray([float(t)])
        vals = {name: float(self.values_on(tt, name)[0]) for name in FAMILY_PARAMS[self.family]}
        return normal_form_from_params(self.family, vals)


def normal_form_from_params(family: str, vals: Mapping[str, float]) -> NormalFormConnection:
    """Build a normal form from a flat name -> value mapping."""
    stray = sorted(set(vals) - set(FAMILY_PARAMS[family]))
    if stray:
        raise FamilyMismatch(f"parameters {stray} do not belong to family {family!r}")
    v = {name: float(vals.get(name, 0.0)) for name in FAMILY_PARAMS[family]}
    if family == ELLIPTIC:
        return EllipticNF(
            (v["alpha1"], v["alpha2"], v["alpha3"]),
            (v["beta1"], v["beta2"], v["beta3"]),
        )
    if family == "loxodromic":
        return LoxodromicNF((v["theta1"], v["theta2"]), (v["tau1"], v["tau2"]), v["u"], v["v"])
    if family == "parabolic_c1":
        return ParabolicC1NF(v["alpha"], v["beta"], v["a"], v["b"], v["p"], v["q"])
    return ParabolicC2NF((v["theta1"], v["theta2"]), (v["tau1"], v["tau2"]), v["p"], v["q"])


# (x-name, y-name, weight) triples: the closed variation formula of each
# family is sum of weight * int (f g' - f' g) dt over these pairs.
WRONSKIAN_TERMS = {
    "elliptic": (
        ("alpha1", "beta1", 0.5),
        ("alpha2", "beta2", 0.5),
        ("alpha3", "beta3", 0.5),
    ),
    "loxodromic": (
        ("theta1", "tau1", 0.5),
        ("theta2", "tau2", 1.0),
        ("v", "u", 1.0 / (4.0 * math.pi**2)),
    ),
    "parabolic_c1": (("alpha", "beta", 1.5),),
    "parabolic_c2": (("theta1", "tau1", 1.0), ("theta2", "tau2", 0.5)),
}


def _as_poly(curve: ParamCurve) -> Polynomial:
    if isinstance(curve, LinearParam):
        return Polynomial([curve.start, curve.end - curve.start])
    if isinstance(curve, PolyParam):
        return Polynomial(curve.coeffs)
    raise TypeError("sampled curves have no polynomial form")


def _wronskian_integral_exact(f: ParamCurve, g: ParamCurve) -> float:
    """int_0^1 (f g' - f' g) dt for linear/polynomial curves, exactly."""
    pf, pg = _as_poly(f), _as_poly(g)
    w = (pf * pg.deriv() - pf.deriv() * pg).integ()
    return float(w(1.0) - w(0.0))


def cs_delta_closed(path: ConnectionPath) -> float:
    """CS change along the path, by the per-family closed formula.

    Linear and polynomial parameter paths integrate exactly; paths with
    sampled parameters evaluate the Wronskian density on the sample grid
    (second-order differences) and integrate by Simpson.
    """
    grid = path.sample_grid()
    terms = WRONSKIAN_TERMS[path.family]
    if grid is None:
        return sum(w * _wronskian_integral_exact(path._curve(f), path._curve(g)) for f, g, w in terms)
    dens = np.zeros_like(grid)
    for f, g, w in terms:
        fv, gv = path.values_on(grid, f), path.values_on(grid, g)
        fd, gd = path.derivs_on(grid, f), path.derivs_on(grid, g)
        dens += w * (fv * gd - fd * gv)
    return float(simpson(dens, x=grid))


def cs_integrand(path: ConnectionPath, t: np.ndarray) -> np.ndarray:
    """Trace density tr(cy cx' - cx cy') / (8 pi^2) on a time grid."""
    fam = path.family
    xs = [path.values_on(t, name) for name in FAMILY_X_PARAMS[fam]]
    ys = [path.values_on(t, name) for name in FAMILY_Y_PARAMS[fam]]
    dxs = [path.derivs_on(t, name) for name in FAMILY_X_PARAMS[fam]]
    dys = [path.derivs_on(t, name) for name in FAMILY_Y_PARAMS[fam]]
    cx = direction_matrix(fam, xs)
    cy = direction_matrix(fam, ys)
    dcx = direction_matrix(fam, dxs)  # the builder is linear, so this is cx'
    dcy = direction_matrix(fam, dys)
    tr = np.einsum("...ij,...ji->...", cy, dcx) - np.einsum("...ij,...ji->...", cx, dcy)
    return np.real(tr) / EIGHT_PI_SQ


def cs_delta_quadrature(path: ConnectionPath, n: int = 256) -> float:
    """CS change along the path by Simpson quadrature of the trace density.

    ``n`` (even, >= 2) is the panel count for smooth parameter paths;
    paths with sampled parameters integrate on their own grid instead.
    """
    if n < 2 or n % 2 != 0:
        raise ValueError(f"panel count must be even and >= 2, got {n}")
    grid = path.sample_grid()
    t = np.linspace(0.0, 1.0, n + 1) if grid is None else grid
    return float(simpson(cs_integrand(path, t), x=t))


def gauge_shift_closed(m: int, n: int, alpha, beta) -> float:
    """CS shift of an elliptic connection under the (m, n) gauge loop."""
    return 0.5 * m * (beta[0] - beta[1]) - 0.5 * n * (alpha[0] - alpha[1])


def gauge_shift_boundary_integral(nf: NormalFormConnection, n_grid: int = 256) -> float:
    """Boundary-torus integral form of the basic (1, 0) gauge shift.

    Gauging an elliptic connection A by g(x) = diag(e^{2 pi i x},
    e^{-2 pi i x}, 1) changes CS by (1/8 pi^2) int_T tr(g^{-1} A g ∧
    g^{-1} dg); the integrand is y-independent, so a periodic-trapezoid
    average over x (spectrally accurate) evaluates the torus integral.
    Matches gauge_shift_closed(1, 0, alpha, beta).
    """
    if not isinstance(nf, EllipticNF):
        raise TypeError("gauge loops in this normal form act on elliptic connections")
    if n_grid < 16:
        raise ValueError(f"n_grid must be >= 16, got {n_grid}")
    _, cy = connection_coeffs(nf)
    total = 0.0
    for k in range(n_grid):
        x = k / n_grid
        e = np.exp(2j * math.pi * x)
        g = np.diag([e, np.conj(e), 1.0])
        ginv = np.diag([np.conj(e), e, 1.0])
        dg = 2j * math.pi * np.diag([e, -np.conj(e), 0.0])
        # dx^dy coefficient of tr(g^-1 A g ^ g^-1 dg): only the cy dy term
        # survives against the dx-valued Maurer-Cartan form, with a sign
        # from reordering dy^dx.
        total += -np.real(np.trace(ginv @ cy @ g @ ginv @ dg))
    return total / n_grid / EIGHT_PI_SQ


def mod_z(value):
    """Reduce to the representative in [0, 1); exact for Fractions."""
    if isinstance(value, Fraction):
        return value - (value.numerator // value.denominator)
    v = float(value) % 1.0
    return 0.0 if v >= 1.0 else v
