"""Normal forms of flat u(2,1) connections on the boundary torus.

A flat connection A = cx dx + cy dy on the 2-torus (coordinates x, y of
period 1) with constant u(2,1)-valued coefficients falls, up to gauge,
into one of four families according to the isometry type of its holonomy:

* elliptic        -- diagonal, parameters alpha = (a1,a2,a3), beta likewise;
* loxodromic      -- diagonal phases plus a hyperbolic 2x2 block driven by
                     real parameters u, v;
* parabolic, case 1 -- minimal polynomial (x-1)^3 before the phase twist,
                     parameters (alpha, a, p) in x and (beta, b, q) in y;
* parabolic, case 2 -- minimal polynomial (x-1)^2, parameters
                     (theta1, theta2, p) and (tau1, tau2, q).

For each family the x- and y-coefficients come from a single linear
"direction" builder applied to the x-parameters resp. y-parameters, and
[cx, cy] = 0 holds identically, so the connection integrates to a global
developing map D: R^2 -> G (universal cover of U(2,1)) with D(0,0) = 1
and D a homomorphism of the additive plane.  The closed-form developing
maps below track the two covering angles explicitly, including the
arctan terms the parabolic families pick up in theta2.

Holonomy of the two basic loops is D(1,0) and D(0,1); flatness makes the
pair commute in G.

Everything here is pure and stateless.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .ug21 import GElement

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class EllipticNF:
    alpha: tuple[float, float, float]
    beta: tuple[float, float, float]


@dataclass(frozen=True)
class LoxodromicNF:
    theta: tuple[float, float]
    tau: tuple[float, float]
    u: float
    v: float


@dataclass(frozen=True)
class ParabolicC1NF:
    alpha: float
    beta: float
    a: float
    b: float
    p: float
    q: float


@dataclass(frozen=True)
class ParabolicC2NF:
    theta: tuple[float, float]
    tau: tuple[float, float]
    p: float
    q: float


NormalFormConnection = Union[EllipticNF, LoxodromicNF, ParabolicC1NF, ParabolicC2NF]

ELLIPTIC = "elliptic"
LOXODROMIC = "loxodromic"
PARABOLIC_C1 = "parabolic_c1"
PARABOLIC_C2 = "parabolic_c2"

FAMILIES = (ELLIPTIC, LOXODROMIC, PARABOLIC_C1, PARABOLIC_C2)

# Flat parameter-name order per family: x-direction names then y-direction
# names, aligned so the same direction builder serves both.
FAMILY_X_PARAMS = {
    ELLIPTIC: ("alpha1", "alpha2", "alpha3"),
    LOXODROMIC: ("theta1", "theta2", "u"),
    PARABOLIC_C1: ("alpha", "a", "p"),
    PARABOLIC_C2: ("theta1", "theta2", "p"),
}
FAMILY_Y_PARAMS = {
    ELLIPTIC: ("beta1", "beta2", "beta3"),
    LOXODROMIC: ("tau1", "tau2", "v"),
    PARABOLIC_C1: ("beta", "b", "q"),
    PARABOLIC_C2: ("tau1", "tau2", "q"),
}
FAMILY_PARAMS = {f: FAMILY_X_PARAMS[f] + FAMILY_Y_PARAMS[f] for f in FAMILIES}


def family_tag(nf: NormalFormConnection) -> str:
    if isinstance(nf, EllipticNF):
        return ELLIPTIC
    if isinstance(nf, LoxodromicNF):
        return LOXODROMIC
    if isinstance(nf, ParabolicC1NF):
        return PARABOLIC_C1
    if isinstance(nf, ParabolicC2NF):
        return PARABOLIC_C2
    raise TypeError(f"not a normal form connection: {nf!r}")


def _x_values(nf: NormalFormConnection) -> tuple[float, float, float]:
    if isinstance(nf, EllipticNF):
        return nf.alpha
    if isinstance(nf, LoxodromicNF):
        return (nf.theta[0], nf.theta[1], nf.u)
    if isinstance(nf, ParabolicC1NF):
        return (nf.alpha, nf.a, nf.p)
    return (nf.theta[0], nf.theta[1], nf.p)


def _y_values(nf: NormalFormConnection) -> tuple[float, float, float]:
    if isinstance(nf, EllipticNF):
        return nf.beta
    if isinstance(nf, LoxodromicNF):
        return (nf.tau[0], nf.tau[1], nf.v)
    if isinstance(nf, ParabolicC1NF):
        return (nf.beta, nf.b, nf.q)
    return (nf.tau[0], nf.tau[1], nf.q)


def direction_matrix(family: str, values) -> np.ndarray:
    """u(2,1) coefficient matrix of one coordinate direction.

    ``values`` are the three direction parameters in FAMILY_X_PARAMS
    order; arrays broadcast, giving a (..., 3, 3) stack.  The builder is
    linear in the parameters, so it also produces t-derivative stacks
    when fed parameter derivatives.
    """
    v1, v2, v3 = (np.asarray(v, dtype=float) for v in values)
    v1, v2, v3 = np.broadcast_arrays(v1, v2, v3)
    out = np.zeros(v1.shape + (3, 3), dtype=complex)
    if family == ELLIPTIC:
        out[..., 0, 0] = TWO_PI * 1j * v1
        out[..., 1, 1] = TWO_PI * 1j * v2
        out[..., 2, 2] = TWO_PI * 1j * v3
    elif family == LOXODROMIC:
        out[..., 0, 0] = TWO_PI * 1j * v1
        out[..., 1, 1] = TWO_PI * 1j * v2
        out[..., 2, 2] = TWO_PI * 1j * v2
        out[..., 1, 2] = v3
        out[..., 2, 1] = v3
    elif family == PARABOLIC_C1:
        phase = TWO_PI * 1j * v1
        out[..., 0, 0] = phase - 1j * v3
        out[..., 1, 1] = phase
        out[..., 2, 2] = phase + 1j * v3
        out[..., 0, 1] = v2
        out[..., 1, 2] = v2
        out[..., 2, 1] = v2
        out[..., 1, 0] = -v2
        out[..., 0, 2] = 1j * v3
        out[..., 2, 0] = -1j * v3
    elif family == PARABOLIC_C2:
        out[..., 0, 0] = TWO_PI * 1j * v1 - 1j * v3
        out[..., 1, 1] = TWO_PI * 1j * v2
        out[..., 2, 2] = TWO_PI * 1j * v1 + 1j * v3
        out[..., 0, 2] = 1j * v3
        out[..., 2, 0] = -1j * v3
    else:
        raise ValueError(f"unknown family {family!r}")
    return out


def connection_coeffs(nf: NormalFormConnection) -> tuple[np.ndarray, np.ndarray]:
    """Constant coefficient matrices (cx, cy) of the flat connection."""
    tag = family_tag(nf)
    return direction_matrix(tag, _x_values(nf)), direction_matrix(tag, _y_values(nf))


def developing_map(nf: NormalFormConnection, x: float, y: float) -> GElement:
    """Value at (x, y) of the developing map R^2 -> G with D(0,0) = 1."""
    if isinstance(nf, EllipticNF):
        phases = [TWO_PI * (a * x + b * y) for a, b in zip(nf.alpha, nf.beta)]
        mat = np.diag([np.exp(1j * ph) for ph in phases])
        return GElement(mat, phases[0] + phases[1] + phases[2], phases[2])
    if isinstance(nf, LoxodromicNF):
        ph1 = TWO_PI * (nf.theta[0] * x + nf.tau[0] * y)
        ph2 = TWO_PI * (nf.theta[1] * x + nf.tau[1] * y)
        s = nf.u * x + nf.v * y
        e1, e2 = np.exp(1j * ph1), np.exp(1j * ph2)
        mat = np.array(
            [
                [e1, 0.0, 0.0],
                [0.0, e2 * math.cosh(s), e2 * math.sinh(s)],
                [0.0, e2 * math.sinh(s), e2 * math.cosh(s)],
            ]
        )
        return GElement(mat, ph1 + 2.0 * ph2, ph2)
    if isinstance(nf, ParabolicC1NF):
        s = nf.a * x + nf.b * y
        pp = nf.p * x + nf.q * y
        ph = TWO_PI * (nf.alpha * x + nf.beta * y)
        tw = np.exp(1j * ph)
        half = 0.5 * s * s
        mat = tw * np.array(
            [
                [1.0 - half - 1j * pp, s, half + 1j * pp],
                [-s, 1.0, s],
                [-half - 1j * pp, s, 1.0 + half + 1j * pp],
            ]
        )
        return GElement(mat, 3.0 * ph, math.atan2(pp, 1.0 + half) + ph)
    if isinstance(nf, ParabolicC2NF):
        ph1 = TWO_PI * (nf.theta[0] * x + nf.tau[0] * y)
        ph2 = TWO_PI * (nf.theta[1] * x + nf.tau[1] * y)
        pp = nf.p * x + nf.q * y
        e1, e2 = np.exp(1j * ph1), np.exp(1j * ph2)
        mat = np.array(
            [
                [e1 * (1.0 - 1j * pp), 0.0, 1j * pp * e1],
                [0.0, e2, 0.0],
                [-1j * pp * e1, 0.0, e1 * (1.0 + 1j * pp)],
            ]
        )
        return GElement(mat, 2.0 * ph1 + ph2, ph1 + math.atan(pp))
    raise TypeError(f"not a normal form connection: {nf!r}")


def holonomy(nf: NormalFormConnection) -> tuple[GElement, GElement]:
    """G-holonomy (rho(mu), rho(lambda)) of the two basic torus loops."""
    return developing_map(nf, 1.0, 0.0), developing_map(nf, 0.0, 1.0)
