# -*- coding: utf-8 -*-

import itertools
import math

import numpy as np
import pytest
from scipy.linalg import expm
from scipy.special import eval_jacobi

from tomoctx import angular
from tomoctx.angular import EulerAngles
from tomoctx.qcore import magnetic_labels, spin_generators


@pytest.mark.parametrize('n', [0, 1, 2, 5, 9])
@pytest.mark.parametrize('a, b', [(0, 0), (1, 2), (3, 0), (2, 5)])
def test_jacobi_matches_scipy(n, a, b):
    x = np.linspace(-1.0, 1.0, 17)
    assert np.allclose(angular.jacobi_poly(n, a, b, x),
                       eval_jacobi(n, a, b, x), atol=1e-10)


def test_jacobi_scalar_output():
    value = angular.jacobi_poly(3, 1, 1, 0.3)
    assert isinstance(value, float)
    with pytest.raises(ValueError):
        angular.jacobi_poly(-1, 0, 0, 0.3)


@pytest.mark.parametrize('two_j', [1, 2, 3, 4, 6])
def test_small_d_is_exponential_of_jy(two_j):
    _, jy, _ = spin_generators(two_j)
    for beta in (0.0, 0.3, 1.1, np.pi / 2, 2.9, np.pi):
        expected = expm(1j * beta * jy).real
        assert np.allclose(angular.small_d_matrix(two_j, beta), expected,
                           atol=1e-12)


def test_small_d_spin1_matrix():
    beta = 0.77
    cos, sin = np.cos(beta), np.sin(beta)
    root = np.sqrt(2.0)
    expected = np.array([
        [(1 + cos) / 2, sin / root, (1 - cos) / 2],
        [-sin / root, cos, sin / root],
        [(1 - cos) / 2, -sin / root, (1 + cos) / 2]])
    assert np.allclose(angular.small_d_matrix(2, beta), expected, atol=1e-14)


def test_small_d_is_orthogonal():
    mat = angular.small_d_matrix(5, np.array([0.4, 1.7]))
    for idx in range(2):
        assert np.allclose(mat[idx] @ mat[idx].T, np.eye(6), atol=1e-12)


def test_small_d_symmetries():
    beta = 1.234
    for two_mp in (3, 1, -1, -3):
        for two_m in (3, 1, -1, -3):
            value = angular.small_d(3, two_mp, two_m, beta)
            sign = (-1) ** ((two_mp - two_m) // 2)
            assert value == pytest.approx(
                sign * angular.small_d(3, two_m, two_mp, beta), abs=1e-14)
            assert value == pytest.approx(
                angular.small_d(3, -two_m, -two_mp, beta), abs=1e-14)


def test_wigner_D_phases():
    ang = EulerAngles(0.4, 1.1, -0.7)
    value = angular.wigner_D(2, 2, -2, ang)
    expected = (np.exp(1j * ang.gamma) * angular.small_d(2, 2, -2, ang.beta) *
                np.exp(-1j * ang.alpha))
    assert value == pytest.approx(expected)


def test_wigner_D_factorization():
    alpha, beta, gamma = 0.3, 1.2, 2.1
    full = angular.wigner_D_matrix(2, alpha, beta, gamma)
    factored = (angular.wigner_D_matrix(2, 0.0, 0.0, gamma) @
                angular.wigner_D_matrix(2, 0.0, beta, 0.0) @
                angular.wigner_D_matrix(2, alpha, 0.0, 0.0))
    assert np.allclose(full, factored, atol=1e-14)


def test_wigner_D_matrix_is_unitary():
    mats = angular.wigner_D_matrix(3, np.array([0.1, 2.0]),
                                   np.array([0.5, 3.0]), np.array([1.0, 4.0]))
    for mat in mats:
        assert np.allclose(mat @ mat.conj().T, np.eye(4), atol=1e-12)


@pytest.mark.parametrize('args, expected', [
    ((2, 2, 2, 2, -2, 0), 1 / math.sqrt(6)),
    ((2, 2, 2, 2, 0, -2), -1 / math.sqrt(6)),
    ((2, 2, 4, 2, 0, -2), -1 / math.sqrt(10)),
    ((2, 2, 4, 2, 2, -4), 1 / math.sqrt(5)),
    ((2, 2, 4, 2, -2, 0), 1 / math.sqrt(30)),
    ((2, 2, 4, 0, 0, 0), math.sqrt(2 / 15.0)),
    ((1, 1, 2, 1, -1, 0), 1 / math.sqrt(6)),
    ((0, 0, 0, 0, 0, 0), 1.0),
])
def test_wigner_3j_values(args, expected):
    assert angular.wigner_3j(*args) == pytest.approx(expected, abs=1e-14)


def test_wigner_3j_selection_rules():
    # m sum, triangle and parity violations
    assert angular.wigner_3j(2, 2, 2, 2, 2, 0) == 0.0
    assert angular.wigner_3j(2, 2, 6, 0, 0, 0) == 0.0
    assert angular.wigner_3j(2, 2, 2, 0, 0, 0) == 0.0
    args = angular.ThreeJArgs(2, 2, 4, 0, 2, -2)
    assert angular.wigner_3j(*args) == pytest.approx(
        angular.wigner_3j(2, 2, 4, 2, 0, -2))


@pytest.mark.parametrize('two_j3', [0, 2, 4])
def test_wigner_3j_orthogonality(two_j3):
    labels = [2, 0, -2]
    total = 0.0
    same = 0.0
    for two_m1 in labels:
        for two_m2 in labels:
            value = angular.wigner_3j(2, 2, two_j3, two_m1, two_m2,
                                      -two_m1 - two_m2)
            total += (two_j3 + 1) * value ** 2
            if two_m1 + two_m2 == 0:
                same += (two_j3 + 1) * value ** 2
    # sum over m1, m2 of (2J+1) 3j^2 counts every m3 once
    assert total == pytest.approx(two_j3 + 1, abs=1e-12)
    assert same == pytest.approx(1.0, abs=1e-12)


def _three_j_labels(max_two_j=4):
    for two_js in itertools.product(range(max_two_j + 1), repeat=3):
        for two_ms in itertools.product(*(magnetic_labels(two_j)
                                          for two_j in two_js)):
            yield two_js, two_ms


def test_wigner_3j_column_permutations():
    for (two_j1, two_j2, two_j3), (two_m1, two_m2, two_m3) in \
            _three_j_labels():
        value = angular.wigner_3j(two_j1, two_j2, two_j3,
                                  two_m1, two_m2, two_m3)
        cyclic = angular.wigner_3j(two_j2, two_j3, two_j1,
                                   two_m2, two_m3, two_m1)
        assert cyclic == pytest.approx(value, abs=1e-14)
        # odd 2J forces a zero symbol, so only even sums carry a sign
        two_big_j = two_j1 + two_j2 + two_j3
        sign = (-1) ** (two_big_j // 2) if two_big_j % 2 == 0 else 0
        swapped = angular.wigner_3j(two_j2, two_j1, two_j3,
                                    two_m2, two_m1, two_m3)
        assert swapped == pytest.approx(sign * value, abs=1e-14)
        flipped = angular.wigner_3j(two_j1, two_j2, two_j3,
                                    -two_m1, -two_m2, -two_m3)
        assert flipped == pytest.approx(sign * value, abs=1e-14)


@pytest.mark.parametrize('two_j1, two_j2',
                         list(itertools.product(range(5), repeat=2)))
def test_wigner_3j_orthogonality_exhaustive(two_j1, two_j2):
    allowed = [two_j3 for two_j3 in range(abs(two_j1 - two_j2),
                                          two_j1 + two_j2 + 1, 2)]
    for two_j3, two_j3_other in itertools.product(allowed, repeat=2):
        for two_m3 in magnetic_labels(min(two_j3, two_j3_other)):
            total = 0.0
            for two_m1 in magnetic_labels(two_j1):
                two_m2 = -two_m1 - two_m3
                if abs(two_m2) > two_j2:
                    continue
                total += (two_j3 + 1) * \
                    angular.wigner_3j(two_j1, two_j2, two_j3,
                                      two_m1, two_m2, two_m3) * \
                    angular.wigner_3j(two_j1, two_j2, two_j3_other,
                                      two_m1, two_m2, two_m3)
            expected = 1.0 if two_j3 == two_j3_other else 0.0
            assert total == pytest.approx(expected, abs=1e-12)
