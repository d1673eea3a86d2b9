# -*- coding: utf-8 -*-

from __future__ import absolute_import
from __future__ import print_function
from __future__ import division

import math
from collections import namedtuple
from functools import lru_cache

import numpy as np

from .qcore import check_twice_j, label_index, magnetic_labels

# All spin labels are stored doubled (two_j, two_m) so half-integer spins
# stay exact integers.
EulerAngles = namedtuple('EulerAngles', ['alpha', 'beta', 'gamma'])
EulerAngles.__new__.__defaults__ = (0.0,)

ThreeJArgs = namedtuple('ThreeJArgs',
                        ['two_j1', 'two_j2', 'two_j3',
                         'two_m1', 'two_m2', 'two_m3'])

_FACTORIALS = [math.factorial(n) for n in range(21)]


def _factorial(n):
    if n < 0:
        raise ValueError('Factorial of a negative number: {}'.format(n))
    if n < len(_FACTORIALS):
        return _FACTORIALS[n]
    return float(math.factorial(n))


def _to_output(value):
    return float(value) if np.ndim(value) == 0 else value


def _generalized_binom(upper, k):
    out = 1.0
    for idx in range(k):
        out *= (upper - idx) / (idx + 1)
    return out


def _jacobi_sum(n, a, b, x):
    total = np.zeros_like(x)
    for s in range(n + 1):
        total = total + (_generalized_binom(n + a, n - s) *
                         _generalized_binom(n + b, s) *
                         ((x - 1) / 2.0) ** s * ((x + 1) / 2.0) ** (n - s))
    return total


def jacobi_poly(n, a, b, x):
    ''' Jacobi polynomial P_n^(a, b)(x) by the three-term recurrence

        Parameters
        ----------
        n: int
            The degree, n >= 0
        a, b: float
            The Jacobi parameters. Negative integer values are allowed; if the
            recurrence degenerates for them the explicit sum is used instead
        x: float or np.ndarray
            The evaluation point(s)
    '''
    if int(n) != n or n < 0:
        raise ValueError('Jacobi degree must be a nonnegative integer')
    x = np.asarray(x, dtype=np.float64)
    p_prev = np.ones_like(x)
    if n == 0:
        return _to_output(p_prev)
    p_curr = (a + 1) + (a + b + 2) * (x - 1) / 2.0
    for k in range(2, int(n) + 1):
        c = 2 * k + a + b
        a1 = 2 * k * (k + a + b) * (c - 2)
        if a1 == 0:
            return _to_output(_jacobi_sum(int(n), a, b, x))
        a2 = (c - 1) * (a * a - b * b)
        a3 = (c - 2) * (c - 1) * c
        a4 = 2 * (k + a - 1) * (k + b - 1) * c
        p_prev, p_curr = p_curr, ((a2 + a3 * x) * p_curr - a4 * p_prev) / a1
    return _to_output(p_curr)


def _small_d_direct(two_j, two_mp, two_m, beta):
    # Valid for m' >= |m|, where both Jacobi parameters are nonnegative
    j_p_mp = (two_j + two_mp) // 2
    j_m_mp = (two_j - two_mp) // 2
    j_p_m = (two_j + two_m) // 2
    j_m_m = (two_j - two_m) // 2
    pref = math.sqrt(_factorial(j_p_mp) * _factorial(j_m_mp) /
                     (_factorial(j_p_m) * _factorial(j_m_m)))
    half = np.asarray(beta, dtype=np.float64) / 2.0
    a = (two_mp - two_m) // 2
    b = (two_mp + two_m) // 2
    return (pref * np.cos(half) ** b * np.sin(half) ** a *
            jacobi_poly(j_m_mp, a, b, np.cos(2.0 * half)))


def small_d(two_j, two_m_row, two_m_col, beta):
    ''' Element d^j_{m'm}(beta) of the factorial/Jacobi formula

        Index pairs outside m' >= |m| are mapped onto it with
        d_{m'm} = (-1)^{m'-m} d_{mm'} and d_{m'm} = d_{-m,-m'}.
    '''
    label_index(two_j, two_m_row)
    label_index(two_j, two_m_col)
    mp, m = two_m_row, two_m_col
    sign = -1.0 if ((mp - m) // 2) % 2 else 1.0
    if mp >= abs(m):
        value = _small_d_direct(two_j, mp, m, beta)
    elif m >= abs(mp):
        value = sign * _small_d_direct(two_j, m, mp, beta)
    elif -mp >= abs(m):
        value = sign * _small_d_direct(two_j, -mp, -m, beta)
    else:
        value = _small_d_direct(two_j, -m, -mp, beta)
    return _to_output(value)


def small_d_matrix(two_j, beta):
    ''' The (2j+1)x(2j+1) small-d matrix, vectorized over beta '''
    labels = magnetic_labels(two_j)
    beta = np.asarray(beta, dtype=np.float64)
    out = np.empty(beta.shape + (len(labels), len(labels)))
    for row, two_mp in enumerate(labels):
        for col, two_m in enumerate(labels):
            out[..., row, col] = small_d(two_j, two_mp, two_m, beta)
    return out


def wigner_D(two_j, two_m_row, two_m_col, ang):
    ''' D^j_{m'm} = e^{i m' gamma} d_{m'm}(beta) e^{i m alpha}
    '''
    alpha, beta, gamma = ang
    value = (np.exp(0.5j * two_m_row * np.asarray(gamma)) *
             small_d(two_j, two_m_row, two_m_col, beta) *
             np.exp(0.5j * two_m_col * np.asarray(alpha)))
    return complex(value) if np.ndim(value) == 0 else value


def wigner_D_matrix(two_j, alpha, beta, gamma=0.0):
    labels = np.array(magnetic_labels(two_j)) / 2.0
    alpha, beta, gamma = np.broadcast_arrays(
        np.asarray(alpha, dtype=np.float64),
        np.asarray(beta, dtype=np.float64),
        np.asarray(gamma, dtype=np.float64))
    row_phase = np.exp(1j * gamma[..., None, None] * labels[:, None])
    col_phase = np.exp(1j * alpha[..., None, None] * labels[None, :])
    return row_phase * small_d_matrix(two_j, beta) * col_phase


def _valid_pair(two_j, two_m):
    return abs(two_m) <= two_j and (two_j - two_m) % 2 == 0


@lru_cache(maxsize=None)
def wigner_3j(two_j1, two_j2, two_j3, two_m1, two_m2, two_m3):
    ''' Wigner 3j symbol from the Racah single-sum formula

        Takes the six doubled labels, or a ThreeJArgs unpacked with *.
        Couplings violating the triangle or m-sum rules give 0.
    '''
    for two_j in (two_j1, two_j2, two_j3):
        check_twice_j(two_j)
    if not (_valid_pair(two_j1, two_m1) and _valid_pair(two_j2, two_m2) and
            _valid_pair(two_j3, two_m3)):
        return 0.0
    if two_m1 + two_m2 + two_m3 != 0:
        return 0.0
    if (two_j3 < abs(two_j1 - two_j2) or two_j3 > two_j1 + two_j2 or
            (two_j1 + two_j2 + two_j3) % 2):
        return 0.0

    j1_j2_mj3 = (two_j1 + two_j2 - two_j3) // 2
    j1_mj2_j3 = (two_j1 - two_j2 + two_j3) // 2
    mj1_j2_j3 = (-two_j1 + two_j2 + two_j3) // 2
    big_j = (two_j1 + two_j2 + two_j3) // 2

    j1_p_m1 = (two_j1 + two_m1) // 2
    j1_m_m1 = (two_j1 - two_m1) // 2
    j2_p_m2 = (two_j2 + two_m2) // 2
    j2_m_m2 = (two_j2 - two_m2) // 2
    j3_p_m3 = (two_j3 + two_m3) // 2
    j3_m_m3 = (two_j3 - two_m3) // 2

    triangle = (_factorial(j1_j2_mj3) * _factorial(j1_mj2_j3) *
                _factorial(mj1_j2_j3) / _factorial(big_j + 1))
    norm = math.sqrt(triangle * _factorial(j1_p_m1) * _factorial(j1_m_m1) *
                     _factorial(j2_p_m2) * _factorial(j2_m_m2) *
                     _factorial(j3_p_m3) * _factorial(j3_m_m3))

    shift_1 = (two_j3 - two_j2 + two_m1) // 2
    shift_2 = (two_j3 - two_j1 - two_m2) // 2
    t_min = max(0, -shift_1, -shift_2)
    t_max = min(j1_j2_mj3, j1_m_m1, j2_p_m2)

    terms = []
    for t in range(t_min, t_max + 1):
        denom = (_factorial(t) * _factorial(shift_1 + t) *
                 _factorial(shift_2 + t) * _factorial(j1_j2_mj3 - t) *
                 _factorial(j1_m_m1 - t) * _factorial(j2_p_m2 - t))
        terms.append((-1.0 if t % 2 else 1.0) / denom)

    phase = -1.0 if ((two_j1 - two_j2 - two_m3) // 2) % 2 else 1.0
    return phase * norm * math.fsum(terms)
