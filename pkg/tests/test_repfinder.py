"""Search for representations with prescribed elliptic conjugacy classes."""

from fractions import Fraction

import numpy as np
import pytest

from csu21 import (
    CentralAngles,
    ClassTarget,
    SearchResult,
    SnapFailure,
    Unliftable,
    cs_closed,
    extract_lift_data,
    find_representation,
    implied_angles,
    is_reducible,
    lie_exp,
    presentation,
    random_algebra_element,
    relation_residual,
    sigma_2_3_11_fixture,
    sigma_2_3_11_targets,
    target_from_angles,
)
from csu21.repfinder import _target_diagonals

F = Fraction

ZERO_TRI = (F(0), F(0), F(0))


def _trivial_target(n=3):
    return ClassTarget((ZERO_TRI,) * n, F(0), (0, 0))


# ---------------------------------------------------------------------------
# targets


def test_frozen_targets_reduce_fixture_angles():
    targets = sigma_2_3_11_targets()
    assert len(targets) == 5
    assert [t.central_lifts for t in targets] == [(0, -1), (0, 1), (0, 2), (0, -2), (0, 0)]
    assert all(t.central_fraction == 0 for t in targets)
    for t in targets:
        for tri in t.fractions:
            assert all(0 <= f < 1 for f in tri)
    # negative fixture fractions fold into [0, 1)
    assert targets[1].fractions[2] == (F(5, 11), F(8, 11), F(9, 11))


def test_class_target_validates_rotation_numbers():
    with pytest.raises(ValueError):
        ClassTarget(((F(3, 2), F(0), F(0)),), F(0), (0, 0))
    with pytest.raises(ValueError):
        ClassTarget((ZERO_TRI,), F(-1, 4), (0, 0))


def test_target_from_angles_requires_scalar_lift():
    gens = sigma_2_3_11_fixture()[4].generators
    with pytest.raises(Unliftable):
        target_from_angles(gens, CentralAngles(F(1, 2), F(0)))


def test_implied_angles_checks_generator_count():
    pres = presentation((2, 3, 11))
    with pytest.raises(Unliftable):
        implied_angles(pres, _trivial_target(n=4))


# ---------------------------------------------------------------------------
# residual scoring


def test_residual_vanishes_for_trivial_representation():
    pres = presentation((2, 3, 11))
    mats = [np.eye(3)] * 3
    assert relation_residual(pres, mats, _trivial_target()) <= 1e-12


def test_residual_sees_open_long_relation():
    # The exact target diagonals satisfy every power relation but not the
    # product relation, so the residual must be strictly positive.
    pres = presentation((2, 3, 11))
    target = sigma_2_3_11_targets()[4]
    mats = _target_diagonals(target)
    assert relation_residual(pres, mats, target) > 0.1


def test_residual_checks_matrix_count():
    pres = presentation((2, 3, 11))
    with pytest.raises(ValueError):
        relation_residual(pres, [np.eye(3)] * 2, _trivial_target())


# ---------------------------------------------------------------------------
# the search


def test_search_finds_trivial_target_without_exploring():
    pres = presentation((2, 3, 11))
    result = find_representation(pres, _trivial_target(), seed=0, budget=1)
    assert result.converged
    assert result.residual <= 1e-12
    for m in result.matrices:
        assert np.max(np.abs(m - np.eye(3))) <= 1e-12


def test_search_is_deterministic():
    pres = presentation((2, 3, 11))
    target = sigma_2_3_11_targets()[0]
    r1 = find_representation(pres, target, seed=2, budget=2)
    r2 = find_representation(pres, target, seed=2, budget=2)
    assert r1.residual == r2.residual
    assert r1.iterations == r2.iterations
    for m1, m2 in zip(r1.matrices, r2.matrices):
        assert np.array_equal(m1, m2)


def test_converged_search_solves_case_five():
    pres = presentation((2, 3, 11))
    target = sigma_2_3_11_targets()[4]
    result = find_representation(pres, target, seed=1, budget=16)
    assert result.converged
    assert result.residual <= 1e-8
    data = extract_lift_data(pres, result, target)
    assert cs_closed(pres, data) == F(25, 66)
    assert not is_reducible(list(result.matrices))


def test_residual_is_conjugation_insensitive_at_solutions(rng):
    pres = presentation((2, 3, 11))
    target = sigma_2_3_11_targets()[4]
    result = find_representation(pres, target, seed=1, budget=16)
    u = lie_exp(random_algebra_element(rng, 0.3))
    uinv = np.linalg.inv(u)
    conj = [u @ m @ uinv for m in result.matrices]
    assert relation_residual(pres, conj, target) <= 1e-9


# ---------------------------------------------------------------------------
# extraction


def test_extract_refuses_unconverged_results():
    pres = presentation((2, 3, 11))
    target = sigma_2_3_11_targets()[4]
    fake = SearchResult((np.eye(3),) * 3, residual=1.0, seed=0, iterations=0)
    with pytest.raises(ValueError):
        extract_lift_data(pres, fake, target)


def test_extract_detects_eigenphase_mismatch():
    pres = presentation((2, 3, 11))
    target = sigma_2_3_11_targets()[4]
    fake = SearchResult((np.eye(3),) * 3, residual=0.0, seed=0, iterations=0)
    with pytest.raises(SnapFailure):
        extract_lift_data(pres, fake, target)


def test_extract_flags_unliftable_targets():
    pres = presentation((2, 3, 11))
    # a_1 = 2 cannot power a primitive third root of unity to the identity
    target = ClassTarget(((F(1, 3), F(0), F(0)), ZERO_TRI, ZERO_TRI), F(0), (0, 0))
    mats = tuple(_target_diagonals(target))
    fake = SearchResult(mats, residual=0.0, seed=0, iterations=0)
    with pytest.raises(Unliftable):
        extract_lift_data(pres, fake, target)
