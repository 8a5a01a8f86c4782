"""Exact Chern-Simons invariants of representations of Seifert homology spheres.

The Brieskorn homology sphere Sigma(a_1, ..., a_n) (n >= 3, moduli
pairwise coprime) fibers over an orbifold sphere; its fundamental group
is generated by fiber generators x_1, ..., x_n and a central element h
subject to

    x_i^{a_i} h^{b_i} = 1,    x_1 x_2 ... x_n = 1,

where the integers b_i satisfy sum b_i / a_i = 1/a with a = a_1 ... a_n.
A representation into the universal cover of U(2,1) sending each x_i to
a lift of a diagonal element diag(e^{2 pi i p_i}, e^{2 pi i q_i},
e^{2 pi i r_i}) is encoded by rational data

    (p_0, q_0, r_0; p_i, q_i, r_i; s_i),

with the central angles p_0, q_0, r_0 congruent mod Z and the relations
forcing

    a_i p_i + b_i p_0 = s_i in Z,    a_i q_i + b_i q_0 = -s_i,
    a_i r_i + b_i r_0 = 0,

which in turn imply sum s_i/a_i = sum p_i + p_0/a = -sum q_i - q_0/a and
r_0 = -a sum r_i.  For such data the Chern-Simons invariant has the
closed form

    cs = (a/2) ((sum p_i)^2 + (sum q_i)^2 + (sum r_i)^2)  mod Z,

and the Burns-Epstein invariant of the corresponding spherical CR
structure is mu = -cs mod Z.  A second, independent route chains the
variation formulas through a path of cone connections:

    cs(A_0) = -(a/2) S' (-P + Q + 2 s_n/a_n) - (p_0 P + q_0 Q + r_0 R)/2,
    cs(B_0) = (a/2) (s_n/a_n) (-P + Q + 2 S'),      S' = sum_{i<n} s_i/a_i,

with cs = cs(A_0) - cs(B_0) mod Z.  Both routes are implemented on
``fractions.Fraction`` throughout -- floating point never enters this
module -- and their exact agreement is a standing cross-check.

``sigma_2_3_11_fixture`` freezes the five irreducible classes of
Sigma(2, 3, 11) with invariants 13/66, 13/66, 7/66, 7/66, 25/66.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .variation import mod_z


class NotCoprime(ValueError):
    """Seifert moduli must be pairwise coprime."""


class LengthMismatch(ValueError):
    """Per-generator tuples disagree with the presentation length."""


class InvalidRepData(ValueError):
    """Representation data violates the presentation constraints."""


class Unliftable(ValueError):
    """Angle data admits no lift consistent with the relations."""


def _ext_gcd(p: int, q: int) -> tuple[int, int, int]:
    """(g, x, y) with p x + q y = g = gcd(p, q), by the iterative scheme."""
    old_r, r = p, q
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_s, s = s, old_s - quo * s
        old_t, t = t, old_t - quo * t
    return old_r, old_s, old_t


def _validate_moduli(a: tuple[int, ...]) -> None:
    if len(a) < 3:
        raise ValueError(f"need at least 3 Seifert moduli, got {len(a)}")
    for ai in a:
        if ai <= 1:
            raise ValueError(f"Seifert moduli must exceed 1, got {ai}")
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            if math.gcd(a[i], a[j]) != 1:
                raise NotCoprime(f"moduli a_{i + 1}={a[i]} and a_{j + 1}={a[j]} share a factor")


def solve_b(a) -> tuple[int, ...]:
    """Integers b_i with sum b_i/a_i = 1/(a_1 ... a_n), deterministically.

    Solves sum b_i (a/a_i) = 1 by a running extended Euclid over the
    cofactors a/a_i, then shifts each b_i (i < n) into the balanced
    window [-a_i/2, a_i/2), compensating on b_n.  Homology-sphere data
    makes the cofactors globally coprime, so a solution always exists.
    """
    a = tuple(int(ai) for ai in a)
    _validate_moduli(a)
    total = math.prod(a)
    cof = [total // ai for ai in a]
    g = cof[0]
    coeff = [1]
    for c in cof[1:]:
        g, x, y = _ext_gcd(g, c)
        coeff = [cf * x for cf in coeff] + [y]
    assert g == 1, "pairwise coprime moduli must have coprime cofactors"
    b = coeff
    for i in range(len(a) - 1):
        lo = -(a[i] // 2)
        shifted = (b[i] - lo) % a[i] + lo
        b[-1] += ((b[i] - shifted) // a[i]) * a[-1]
        b[i] = shifted
    return tuple(b)


@dataclass(frozen=True)
class SeifertPresentation:
    """Moduli a_i and central twists b_i of Sigma(a_1, ..., a_n)."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        _validate_moduli(self.a)
        if len(self.b) != len(self.a):
            raise LengthMismatch(f"{len(self.a)} moduli but {len(self.b)} twists")
        total = self.product
        if sum(Fraction(bi, ai) for ai, bi in zip(self.a, self.b)) != Fraction(1, total):
            raise ValueError("twists must satisfy sum b_i/a_i = 1/(a_1...a_n)")

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def product(self) -> int:
        return math.prod(self.a)


def presentation(a, b=None) -> SeifertPresentation:
    """Presentation with the given moduli; b solved canonically if omitted."""
    a = tuple(int(ai) for ai in a)
    return SeifertPresentation(a, tuple(b) if b is not None else solve_b(a))


def _frac(v) -> Fraction:
    if isinstance(v, float):
        raise TypeError("this module is exact; pass Fraction/int, not float")
    return Fraction(v)


@dataclass(frozen=True)
class LiftedRepData:
    """Exact angle data of a lifted diagonal representation."""

    p0: Fraction
    q0: Fraction
    r0: Fraction
    p: tuple[Fraction, ...]
    q: tuple[Fraction, ...]
    r: tuple[Fraction, ...]
    s: tuple[int, ...]

    def __post_init__(self):
        for name in ("p0", "q0", "r0"):
            object.__setattr__(self, name, _frac(getattr(self, name)))
        for name in ("p", "q", "r"):
            object.__setattr__(self, name, tuple(_frac(v) for v in getattr(self, name)))
        object.__setattr__(self, "s", tuple(int(v) for v in self.s))


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.ok)


def validate_rep(pres: SeifertPresentation, data: LiftedRepData) -> ValidationReport:
    """Check every presentation constraint exactly, naming each identity."""
    n = pres.n
    for name in ("p", "q", "r", "s"):
        if len(getattr(data, name)) != n:
            raise LengthMismatch(f"{name} has {len(getattr(data, name))} entries for {n} generators")
    checks = []

    def add(name, ok, detail):
        checks.append(CheckResult(name, ok, detail))

    add("p_0-q_0 in Z", (data.p0 - data.q0).denominator == 1, f"p_0-q_0 = {data.p0 - data.q0}")
    add("p_0-r_0 in Z", (data.p0 - data.r0).denominator == 1, f"p_0-r_0 = {data.p0 - data.r0}")
    for i in range(n):
        ai, bi = pres.a[i], pres.b[i]
        lhs = ai * data.p[i] + bi * data.p0
        add("a_ip_i+b_ip_0=s_i", lhs == data.s[i], f"i={i + 1}: {lhs} vs s_i={data.s[i]}")
        lhs = ai * data.q[i] + bi * data.q0
        add("a_iq_i+b_iq_0=-s_i", lhs == -data.s[i], f"i={i + 1}: {lhs} vs -s_i={-data.s[i]}")
        lhs = ai * data.r[i] + bi * data.r0
        add("a_ir_i+b_ir_0=0", lhs == 0, f"i={i + 1}: {lhs} vs 0")
    ssum = sum(Fraction(data.s[i], pres.a[i]) for i in range(n))
    total = pres.product
    psum = sum(data.p, Fraction(0)) + data.p0 / total
    add("sum s_i/a_i=sum p_i+p_0/a", ssum == psum, f"{ssum} vs {psum}")
    qsum = -sum(data.q, Fraction(0)) - data.q0 / total
    add("sum s_i/a_i=-sum q_i-q_0/a", ssum == qsum, f"{ssum} vs {qsum}")
    rsum = -total * sum(data.r, Fraction(0))
    add("r_0=-a*sum r_i", data.r0 == rsum, f"r_0={data.r0} vs -a*sum r_i={rsum}")
    return ValidationReport(tuple(checks))


def _require_valid(pres, data, validate):
    if validate:
        report = validate_rep(pres, data)
        if not report.ok:
            failed = ", ".join(f"{c.name} ({c.detail})" for c in report.failures())
            raise InvalidRepData(f"representation data violates: {failed}")


def cs_closed(pres: SeifertPresentation, data: LiftedRepData, validate: bool = True) -> Fraction:
    """Closed-form invariant (a/2)(P^2 + Q^2 + R^2) mod Z, exactly."""
    _require_valid(pres, data, validate)
    P = sum(data.p, Fraction(0))
    Q = sum(data.q, Fraction(0))
    R = sum(data.r, Fraction(0))
    return mod_z(Fraction(pres.product, 2) * (P * P + Q * Q + R * R))


def cs_pipeline(pres: SeifertPresentation, data: LiftedRepData, validate: bool = True) -> Fraction:
    """Invariant via the variation pipeline, exactly.

    Chains the elliptic variation formula through the cone connections:
    the endpoint contribution cs(A_0) of the deformation to the flat
    cone, minus the base contribution cs(B_0) of the comparison cone.
    Agrees with ``cs_closed`` mod Z for all valid data.
    """
    _require_valid(pres, data, validate)
    n = pres.n
    total = pres.product
    P = sum(data.p, Fraction(0))
    Q = sum(data.q, Fraction(0))
    R = sum(data.r, Fraction(0))
    s_part = sum(Fraction(data.s[i], pres.a[i]) for i in range(n - 1))
    s_last = Fraction(data.s[-1], pres.a[-1])
    cs_a0 = -Fraction(total, 2) * s_part * (-P + Q + 2 * s_last) - Fraction(1, 2) * (
        data.p0 * P + data.q0 * Q + data.r0 * R
    )
    cs_b0 = Fraction(total, 2) * s_last * (-P + Q + 2 * s_part)
    return mod_z(cs_a0 - cs_b0)


def burns_epstein(cs):
    """Burns-Epstein invariant mu = -cs mod Z (exact for Fractions)."""
    return mod_z(-cs)


@dataclass(frozen=True)
class GeneratorAngles:
    """Exact G-angle data of one generator image.

    ``fractions`` are the three diagonal rotation numbers (p, q, r
    slots); theta1_turns and theta2_turns are the covering angles of the
    chosen lift, in turns (theta / 2 pi).
    """

    fractions: tuple[Fraction, Fraction, Fraction]
    theta1_turns: Fraction
    theta2_turns: Fraction

    def __post_init__(self):
        object.__setattr__(self, "fractions", tuple(_frac(v) for v in self.fractions))
        object.__setattr__(self, "theta1_turns", _frac(self.theta1_turns))
        object.__setattr__(self, "theta2_turns", _frac(self.theta2_turns))


@dataclass(frozen=True)
class CentralAngles:
    """Covering angles (in turns) of the central element's lift."""

    theta1_turns: Fraction
    theta2_turns: Fraction

    def __post_init__(self):
        object.__setattr__(self, "theta1_turns", _frac(self.theta1_turns))
        object.__setattr__(self, "theta2_turns", _frac(self.theta2_turns))


def canonical_lift_data(
    pres: SeifertPresentation,
    generators,
    central: CentralAngles,
) -> LiftedRepData:
    """Assemble LiftedRepData from per-generator angle data.

    The central angles fix r_0 = theta2_turns and split sigma_0 =
    theta1_turns as p_0 + q_0 + r_0 with p_0, q_0 as balanced as
    possible; each p_i is the p-slot fraction as given, q_i is forced by
    sigma_i = p_i + q_i + r_i.  Raises ``Unliftable`` whenever an
    integrality or relation constraint fails, naming the identity.
    """
    generators = tuple(generators)
    if len(generators) != pres.n:
        raise LengthMismatch(f"{pres.n} generators expected, got {len(generators)}")
    sigma0 = central.theta1_turns
    r0 = central.theta2_turns
    d = sigma0 - 3 * r0
    if d.denominator != 1:
        raise Unliftable(f"central angles need sigma_0-3r_0 in Z, got {d}")
    j = d.numerator // 2
    p0 = r0 + j
    q0 = r0 + (d.numerator - j)
    p, q, r, s = [], [], [], []
    for i, gen in enumerate(generators):
        ai, bi = pres.a[i], pres.b[i]
        fp, fq, fr = gen.fractions
        sigma_i = gen.theta1_turns
        r_i = gen.theta2_turns
        if ai * sigma_i + bi * sigma0 != 0:
            raise Unliftable(
                f"i={i + 1}: a_i*theta1_i+b_i*theta1_0 = {ai * sigma_i + bi * sigma0} != 0"
            )
        if ai * r_i + bi * r0 != 0:
            raise Unliftable(f"i={i + 1}: a_ir_i+b_ir_0 = {ai * r_i + bi * r0} != 0")
        if (r_i - fr).denominator != 1:
            raise Unliftable(f"i={i + 1}: theta2 lift {r_i} not congruent to r-fraction {fr}")
        p_i = fp
        q_i = sigma_i - p_i - r_i
        if (q_i - fq).denominator != 1:
            raise Unliftable(f"i={i + 1}: forced q_i={q_i} not congruent to q-fraction {fq}")
        s_i = ai * p_i + bi * p0
        if s_i.denominator != 1:
            raise Unliftable(f"i={i + 1}: a_ip_i+b_ip_0 = {s_i} is not an integer")
        p.append(p_i)
        q.append(q_i)
        r.append(r_i)
        s.append(s_i.numerator)
    data = LiftedRepData(p0, q0, r0, tuple(p), tuple(q), tuple(r), tuple(s))
    report = validate_rep(pres, data)
    assert report.ok, f"internal: assembled data fails {report.failures()}"
    return data


def _rep_from_draws(pres: SeifertPresentation, base: Fraction, j: int, k: int, l: int, s) -> LiftedRepData:
    """Deterministic data from raw draws; all-zero draws give trivial data."""
    s = tuple(int(v) for v in s)
    if len(s) != pres.n:
        raise LengthMismatch(f"{pres.n} generators expected, got {len(s)} twists")
    p0 = base + j
    q0 = base + k
    r0 = base + l
    p = tuple(Fraction(s[i] - pres.b[i] * p0, pres.a[i]) for i in range(pres.n))
    q = tuple(Fraction(-s[i] - pres.b[i] * q0, pres.a[i]) for i in range(pres.n))
    r = tuple(Fraction(-pres.b[i] * r0, pres.a[i]) for i in range(pres.n))
    return LiftedRepData(p0, q0, r0, p, q, r, s)


def make_random_rep(pres: SeifertPresentation, seed: int) -> LiftedRepData:
    """Seeded random data satisfying every constraint exactly."""
    rng = random.Random(seed)
    den = rng.randint(1, 6)
    base = Fraction(rng.randrange(den), den)
    j, k, l = (rng.randint(-3, 3) for _ in range(3))
    s = tuple(rng.randint(-10, 10) for _ in range(pres.n))
    data = _rep_from_draws(pres, base, j, k, l, s)
    assert validate_rep(pres, data).ok
    return data


@dataclass(frozen=True)
class TableCase:
    """One row of the Sigma(2, 3, 11) invariant table."""

    label: str
    generators: tuple[GeneratorAngles, ...]
    central: CentralAngles
    expected_cs: Fraction


def sigma_2_3_11_fixture() -> tuple[TableCase, ...]:
    """The five irreducible classes of Sigma(2, 3, 11), with invariants.

    Angle data is frozen from the constraint equations: theta2 lifts
    satisfy a_i r_i + b_i r_0 = 0 with b = (-1, 1, 2), theta1 lifts all
    vanish, and the expected invariants are 13/66, 13/66, 7/66, 7/66,
    25/66.
    """
    F = Fraction

    def gen(fracs, t2):
        return GeneratorAngles(tuple(F(*f) for f in fracs), F(0), F(t2[0], t2[1]))

    cases = (
        TableCase(
            "1",
            (
                gen(((0, 1), (1, 2), (1, 2)), (-1, 2)),
                gen(((0, 1), (2, 3), (1, 3)), (1, 3)),
                gen(((6, 11), (3, 11), (2, 11)), (2, 11)),
            ),
            CentralAngles(F(0), F(-1)),
            F(13, 66),
        ),
        TableCase(
            "2",
            (
                gen(((0, 1), (1, 2), (1, 2)), (1, 2)),
                gen(((1, 3), (0, 1), (2, 3)), (-1, 3)),
                gen(((-6, 11), (-3, 11), (-2, 11)), (-2, 11)),
            ),
            CentralAngles(F(0), F(1)),
            F(13, 66),
        ),
        TableCase(
            "3",
            (
                gen(((1, 2), (1, 2), (0, 1)), (1, 1)),
                gen(((0, 1), (2, 3), (1, 3)), (-2, 3)),
                gen(((-2, 11), (-5, 11), (-4, 11)), (-4, 11)),
            ),
            CentralAngles(F(0), F(2)),
            F(7, 66),
        ),
        TableCase(
            "4",
            (
                gen(((1, 2), (1, 2), (0, 1)), (-1, 1)),
                gen(((1, 3), (0, 1), (2, 3)), (2, 3)),
                gen(((2, 11), (5, 11), (4, 11)), (4, 11)),
            ),
            CentralAngles(F(0), F(-2)),
            F(7, 66),
        ),
        TableCase(
            "5",
            (
                gen(((1, 2), (1, 2), (0, 1)), (0, 1)),
                gen(((1, 3), (2, 3), (0, 1)), (0, 1)),
                gen(((-1, 11), (1, 11), (0, 1)), (0, 1)),
            ),
            CentralAngles(F(0), F(0)),
            F(25, 66),
        ),
    )
    return cases
