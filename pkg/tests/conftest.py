import numpy as np
import pytest

from csu21 import (
    EllipticNF,
    LoxodromicNF,
    ParabolicC1NF,
    ParabolicC2NF,
    lie_exp,
    lift_to_g,
)
from csu21.normal_forms import ELLIPTIC, LOXODROMIC, PARABOLIC_C1, PARABOLIC_C2
from csu21.ug21 import random_algebra_element


@pytest.fixture
def rng():
    return np.random.default_rng(20260823)


def random_g_element(rng, scale=0.6, max_sheet=2):
    """Seeded cover element: exp of a random algebra draw on a random sheet."""
    m = lie_exp(random_algebra_element(rng, scale))
    k1 = int(rng.integers(-max_sheet, max_sheet + 1))
    k2 = int(rng.integers(-max_sheet, max_sheet + 1))
    return lift_to_g(m, k1, k2)


def random_normal_form(rng, family, lo=-1.2, hi=1.2):
    """Random connection in one family, parameters uniform in [lo, hi]."""

    def u():
        return float(rng.uniform(lo, hi))

    if family == ELLIPTIC:
        return EllipticNF((u(), u(), u()), (u(), u(), u()))
    if family == LOXODROMIC:
        return LoxodromicNF((u(), u()), (u(), u()), u(), u())
    if family == PARABOLIC_C1:
        return ParabolicC1NF(u(), u(), u(), u(), u(), u())
    if family == PARABOLIC_C2:
        return ParabolicC2NF((u(), u()), (u(), u()), u(), u())
    raise ValueError(family)


def shift_generator_lift(pres, data, i, k):
    """Replace the i-th generator lift by a sheet-mate: p_i += k, q_i -= k."""
    from csu21 import LiftedRepData

    p, q, s = list(data.p), list(data.q), list(data.s)
    p[i] += k
    q[i] -= k
    s[i] += pres.a[i] * k
    return LiftedRepData(data.p0, data.q0, data.r0, tuple(p), tuple(q), data.r, tuple(s))


def shift_central_split(pres, data, k):
    """Move the central angle split: p_0 += k, q_0 -= k."""
    from csu21 import LiftedRepData

    s = tuple(si + pres.b[i] * k for i, si in enumerate(data.s))
    return LiftedRepData(data.p0 + k, data.q0 - k, data.r0, data.p, data.q, data.r, s)


def swap_pq(data):
    """Exchange the two rotation slots: p <-> q (an outer symmetry of the data)."""
    from csu21 import LiftedRepData

    return LiftedRepData(
        data.q0, data.p0, data.r0, data.q, data.p, data.r, tuple(-v for v in data.s)
    )
