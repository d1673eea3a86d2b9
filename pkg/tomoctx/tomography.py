# -*- coding: utf-8 -*-

from __future__ import absolute_import
from __future__ import print_function
from __future__ import division

import logging
from collections import OrderedDict, namedtuple
from functools import lru_cache

import numpy as np

from .qcore import (as_matrix, check_twice_j, check_unitary, is_hermitian,
                    label_index, magnetic_labels)
from .angular import small_d, wigner_3j, wigner_D_matrix
from .quad import GridSpec, integrate_euler, integrate_sphere
from .scenarios import scenario_unitaries

logger = logging.getLogger(__name__)

PROB_CLAMP = 1e-10
EIGHT_PI_SQ = 8.0 * np.pi ** 2

U3Params = namedtuple('U3Params', ['theta', 'phi'])


class Tomogram(object):
    ''' Spin tomogram: maps (m, alpha, beta) to a probability

        The evaluator returns every magnetic label at once, stacked along a
        leading axis in the m = j, ..., -j ordering.
    '''

    def __init__(self, two_j, evaluator, source=None):
        super(Tomogram, self).__init__()
        self.two_j = check_twice_j(two_j)
        self.evaluator = evaluator
        self.source = source

    @property
    def dim(self):
        return self.two_j + 1

    def values(self, alpha, beta, gamma=0.0):
        return self.evaluator(alpha, beta, gamma)

    def __call__(self, two_m, alpha, beta, gamma=0.0):
        return self.values(alpha, beta, gamma)[label_index(self.two_j, two_m)]

    def probabilities(self, alpha, beta):
        ''' Values with quadrature noise in [-1e-10, 0) clamped to zero '''
        vals = np.real(self.values(alpha, beta))
        if np.any(vals < -PROB_CLAMP) or np.any(vals > 1 + PROB_CLAMP):
            raise ValueError(
                'Tomogram value outside [0, 1]: min {:.3e}, max {:.3e}'.format(
                    vals.min(), vals.max()))
        return np.clip(vals, 0.0, 1.0)


class DualSymbol(Tomogram):
    ''' Symbol with respect to the quantizer; not a probability '''

    def probabilities(self, alpha, beta):
        raise TypeError('A dual symbol does not define probabilities')


def _check_dim(op, two_j):
    op = as_matrix(op, name='operator')
    if op.shape[0] != check_twice_j(two_j) + 1:
        raise ValueError(
            'Operator of dim {} does not match 2j+1 = {}'.format(
                op.shape[0], two_j + 1))
    return op


def dequantizer(two_j, two_m, ang):
    ''' Rotated projector whose trace against A gives the tomogram

        The tomogram contracts the row index of D with m, so the projector
        is built from the complex conjugate of that row.
    '''
    idx = label_index(two_j, two_m)
    rot = wigner_D_matrix(two_j, ang.alpha, ang.beta, ang.gamma)
    vec = rot[..., idx, :].conj()
    return vec[..., :, None] * vec[..., None, :].conj()


def tomogram_of(op, two_j):
    op = _check_dim(op, two_j)
    hermitian = is_hermitian(op)

    def evaluator(alpha, beta, gamma=0.0):
        rot = wigner_D_matrix(two_j, alpha, beta, gamma)
        vals = np.einsum('...ma,ab,...mb->m...', rot, op, rot.conj())
        return vals.real if hermitian else vals

    return Tomogram(two_j, evaluator, source=op)


@lru_cache(maxsize=None)
def _quantizer_terms(two_j):
    ''' Nonzero (m, J, M, row, col, coefficient) terms of B_m '''
    labels = magnetic_labels(two_j)
    terms = []
    for m_idx, two_m in enumerate(labels):
        for two_big_j in range(0, 2 * two_j + 1, 2):
            outer = wigner_3j(two_j, two_j, two_big_j, two_m, -two_m, 0)
            if outer == 0.0:
                continue
            for row, two_a in enumerate(labels):
                for col, two_b in enumerate(labels):
                    two_m3 = two_b - two_a
                    inner = wigner_3j(two_j, two_j, two_big_j,
                                      two_a, -two_b, two_m3)
                    if inner == 0.0:
                        continue
                    sign = -1.0 if ((two_m - two_b) // 2) % 2 else 1.0
                    coef = sign * outer * (two_big_j + 1) ** 2 * inner
                    terms.append((m_idx, two_big_j, two_m3, row, col, coef))
    return tuple(terms)


def _quantizer_stack(two_j, alpha, beta):
    ''' B_m(alpha, beta) for every m, shape (2j+1,) + grid + (2j+1, 2j+1) '''
    alpha, beta = np.broadcast_arrays(np.asarray(alpha, dtype=np.float64),
                                      np.asarray(beta, dtype=np.float64))
    dim = two_j + 1
    out = np.zeros((dim,) + alpha.shape + (dim, dim), dtype=np.complex128)
    harmonics = {}
    for m_idx, two_big_j, two_m3, row, col, coef in _quantizer_terms(two_j):
        key = (two_big_j, two_m3)
        if key not in harmonics:
            # D^J_{0 M}: the gamma phase carries m' = 0 and drops out
            harmonics[key] = (small_d(two_big_j, 0, two_m3, beta) *
                              np.exp(0.5j * two_m3 * alpha))
        out[m_idx, ..., row, col] += coef * harmonics[key]
    return out


def quantizer(two_j, two_m, alpha, beta):
    ''' The quantizer (1/8pi^2) B_m(alpha, beta) '''
    idx = label_index(two_j, two_m)
    return _quantizer_stack(two_j, alpha, beta)[idx] / EIGHT_PI_SQ


def reconstruct(tom, grid=GridSpec(), collapse_gamma=True):
    ''' Recovers the operator from its tomogram by integrating against B_m '''
    two_j = tom.two_j

    def integrand(alpha, beta, gamma):
        omega = tom.values(alpha, beta, gamma)
        stack = _quantizer_stack(two_j, alpha, beta)
        return np.einsum('m...,m...ij->...ij', omega, stack)

    return integrate_euler(integrand, grid,
                           collapse_gamma=collapse_gamma) / EIGHT_PI_SQ


def dual_symbol(op, two_j):
    op = _check_dim(op, two_j)
    hermitian = is_hermitian(op)

    def evaluator(alpha, beta, gamma=0.0):
        stack = _quantizer_stack(two_j, alpha, beta)
        vals = np.einsum('ab,m...ba->m...', op, stack) / EIGHT_PI_SQ
        if hermitian:
            return vals.real
        return vals

    return DualSymbol(two_j, evaluator, source=op)


def pair(state_tom, dual, grid=GridSpec(), collapse_gamma=True):
    ''' Integrates sum_m omega_rho(m) omega^d_A(m) over the Euler angles '''
    if state_tom.two_j != dual.two_j:
        raise ValueError('Spin mismatch: 2j={} vs 2j={}'.format(
            state_tom.two_j, dual.two_j))

    def integrand(alpha, beta, gamma):
        return np.sum(state_tom.values(alpha, beta, gamma) *
                      dual.values(alpha, beta, gamma), axis=0)

    value = integrate_euler(integrand, grid, collapse_gamma=collapse_gamma)
    return float(np.real(value))


def rotated_tomogram(k_unitary, two_j=2):
    ''' Tomogram of U_k P U_k^+, P the projector on the first basis state '''
    k_unitary = check_unitary(k_unitary, name='scenario unitary')
    if k_unitary.shape[0] != two_j + 1:
        raise ValueError('Unitary of dim {} does not match 2j+1 = {}'.format(
            k_unitary.shape[0], two_j + 1))
    column = k_unitary[:, 0]
    return tomogram_of(np.outer(column, column.conj()), two_j)


def fidelity(tom_k, tom_psi, grid=GridSpec()):
    ''' Tr[P_k P_psi] from the two qutrit tomograms

        Uses the kernel omega_k(m) - omega_k(m+1)/2 - omega_k(m-1)/2 with
        the out-of-range terms omega_k(+-(j+1)) set to zero.
    '''
    if tom_k.two_j != 2 or tom_psi.two_j != 2:
        raise ValueError('The fidelity kernel is defined for j=1, got '
                         '2j={} and 2j={}'.format(tom_k.two_j, tom_psi.two_j))
    dim = tom_k.dim

    def integrand(theta, phi):
        omega_k = tom_k.values(phi, theta)
        omega_psi = tom_psi.values(phi, theta)
        # Index 0 is m = j, so m+1 sits one row above
        upper = np.zeros_like(omega_k)
        lower = np.zeros_like(omega_k)
        upper[1:] = omega_k[:-1]
        lower[:-1] = omega_k[1:]
        kernel = omega_k - 0.5 * upper - 0.5 * lower
        return np.sum(kernel * omega_psi, axis=0)

    return float(dim * np.real(integrate_sphere(integrand, grid)))


def _plane_rotation(theta, first):
    rot = np.eye(3)
    cos, sin = np.cos(theta), np.sin(theta)
    rot[first, first] = cos
    rot[first, first + 1] = -sin
    rot[first + 1, first] = sin
    rot[first + 1, first + 1] = cos
    return rot


def u3_matrix(params):
    ''' A3 = d3 O3 d2^1 O2^1 d1^2 with O3 = J23(theta2) J12(theta1) '''
    theta1, theta2, theta3 = params.theta
    phi = np.asarray(params.phi, dtype=np.float64)
    d3 = np.diag(np.exp(1j * phi[0:3]))
    d21 = np.diag([1.0, np.exp(1j * phi[3]), np.exp(1j * phi[4])])
    d12 = np.diag([1.0, 1.0, np.exp(1j * phi[5])])
    o3 = _plane_rotation(theta2, 1) @ _plane_rotation(theta1, 0)
    o21 = _plane_rotation(theta3, 1)
    return d3 @ o3 @ d21 @ o21 @ d12


def unitary_tomogram(params):
    column = u3_matrix(params)[:, 0]
    return np.abs(column) ** 2


def simplex_points(tom, alpha, beta):
    ''' Rows (w1, w0, w-1) of a qutrit tomogram over the given nodes '''
    if tom.two_j != 2:
        raise ValueError('Simplex projection needs a qutrit tomogram')
    probs = tom.probabilities(alpha, beta)
    return probs.reshape(tom.dim, -1).T


def simplex_coverage(points, divisions=5):
    ''' Fraction of the divisions**2 barycentric cells hit by the points '''
    points = np.asarray(points, dtype=np.float64).reshape(-1, 3)
    size = int(divisions)
    x = points[:, 0] * size
    y = points[:, 1] * size
    col = np.clip(np.floor(x), 0, size - 1).astype(int)
    row = np.clip(np.floor(y), 0, size - 1 - col).astype(int)
    upward = ((x - col) + (y - row) < 1) | (col + row == size - 1)
    cells = set(zip(col.tolist(), row.tolist(), upward.tolist()))
    return len(cells) / float(size * size)


def state_tomogram_closed_form(theta, two_m, alpha, beta):
    ''' Closed-form tomogram of the state (sin theta, cos theta, 0) '''
    cb, sb = np.cos(beta), np.sin(beta)
    s2t = np.sin(2 * theta)
    ca = np.cos(alpha)
    st2, ct2 = np.sin(theta) ** 2, np.cos(theta) ** 2
    root8 = 2.0 * np.sqrt(2.0)
    if two_m == 2:
        return (0.25 * (1 + cb) ** 2 * st2 + 0.5 * sb ** 2 * ct2 +
                sb * (1 + cb) * s2t * ca / root8)
    elif two_m == 0:
        return (0.5 * sb ** 2 * st2 + cb ** 2 * ct2 -
                np.sin(2 * beta) * s2t * ca / root8)
    elif two_m == -2:
        return (0.25 * (1 - cb) ** 2 * st2 + 0.5 * sb ** 2 * ct2 -
                sb * (1 - cb) * s2t * ca / root8)
    raise ValueError('Invalid qutrit label 2m={}'.format(two_m))


def dual_symbol_closed_form(vec, two_m, alpha, beta):
    ''' Closed-form dual symbol of |A><A| for a real A = (A1, A0, A-1) '''
    a1, a0, am1 = [float(val) for val in vec]
    m = two_m / 2.0
    cb, sb = np.cos(beta), np.sin(beta)
    ca = np.cos(alpha)
    pi_sq = np.pi ** 2
    rank0 = (a1 ** 2 + am1 ** 2 + a0 ** 2) / (24 * pi_sq)
    rank1 = (3 * m / (16 * pi_sq)) * (
        np.sqrt(2) * (a1 * a0 + am1 * a0) * sb * ca +
        cb * (a1 ** 2 - am1 ** 2))
    rank2 = (5 * (3 * m ** 2 - 2) / (48 * pi_sq)) * (
        3 * a1 * am1 * np.cos(2 * alpha) * sb ** 2 +
        3 / np.sqrt(2) * (a1 * a0 - am1 * a0) * np.sin(2 * beta) * ca +
        0.5 * (a1 ** 2 + am1 ** 2 - 2 * a0 ** 2) * (3 * cb ** 2 - 1))
    return rank0 + rank1 + rank2


def _projector_1_or_5(sign, phi, two_m, alpha, beta):
    cb, sb = np.cos(beta), np.sin(beta)
    ca, c2a = np.cos(alpha), np.cos(2 * alpha)
    cphi, sphi, tphi = np.cos(phi), np.sin(phi), np.tan(phi)
    c2phi = np.cos(2 * phi)
    root = np.sqrt(c2phi)
    root8 = 2.0 * np.sqrt(2.0)
    ratio = c2phi / cphi ** 2
    lead = root * sphi / cphi ** 2
    if two_m == 2:
        return ((ratio * (1 + cb) ** 2 + (1 - cb) ** 2 +
                 2 * sb ** 2 * tphi ** 2 +
                 sign * 2 * root / cphi * sb ** 2 * c2a) / 8 +
                (lead * sb * (1 + cb) * ca +
                 sign * tphi * sb * (1 - cb) * ca) / root8)
    elif two_m == 0:
        return ((2 * cb ** 2 * tphi ** 2 + sb ** 2 + ratio * sb ** 2 -
                 sign * 2 * root / cphi * sb ** 2 * c2a) / 4 +
                sign * tphi * np.sin(2 * beta) * ca / root8 -
                lead * np.sin(2 * beta) * ca / root8)
    elif two_m == -2:
        return ((ratio * (1 - cb) ** 2 + (1 + cb) ** 2 +
                 2 * sb ** 2 * tphi ** 2 +
                 sign * 2 * root / cphi * sb ** 2 * c2a) / 8 -
                (lead * sb * (1 - cb) * ca +
                 sign * tphi * sb * (1 + cb) * ca) / root8)
    raise ValueError('Invalid qutrit label 2m={}'.format(two_m))


def _projector_2_or_4(sign, phi, two_m, alpha, beta):
    cb, sb = np.cos(beta), np.sin(beta)
    ca = np.cos(alpha)
    cphi2, sphi2 = np.cos(phi) ** 2, np.sin(phi) ** 2
    s2phi = np.sin(2 * phi)
    root8 = 2.0 * np.sqrt(2.0)
    if two_m == 2:
        return ((2 * cphi2 * sb ** 2 + sphi2 * (1 - cb) ** 2) / 4 -
                sign * s2phi * sb * (1 - cb) * ca / root8)
    elif two_m == 0:
        return ((2 * cphi2 * cb ** 2 + sphi2 * sb ** 2) / 2 -
                sign * s2phi * np.sin(2 * beta) * ca / root8)
    elif two_m == -2:
        return ((2 * cphi2 * sb ** 2 + sphi2 * (1 + cb) ** 2) / 4 +
                sign * s2phi * sb * (1 + cb) * ca / root8)
    raise ValueError('Invalid qutrit label 2m={}'.format(two_m))


def projector_tomogram_closed_form(k, phi, two_m, alpha, beta):
    ''' Closed forms of the five scenario projector tomograms '''
    if k == 1:
        return _projector_1_or_5(1.0, phi, two_m, alpha, beta)
    elif k == 2:
        return _projector_2_or_4(1.0, phi, two_m, alpha, beta)
    elif k == 3:
        if two_m == 2:
            return np.cos(beta / 2.0) ** 4
        elif two_m == 0:
            return np.sin(beta) ** 2 / 2.0
        elif two_m == -2:
            return np.sin(beta / 2.0) ** 4
        raise ValueError('Invalid qutrit label 2m={}'.format(two_m))
    elif k == 4:
        return _projector_2_or_4(-1.0, phi, two_m, alpha, beta)
    elif k == 5:
        return _projector_1_or_5(-1.0, phi, two_m, alpha, beta)
    raise ValueError('Unknown projector index: {}'.format(k))


def scenario_tomograms(theta, phi):
    ''' Tomograms of the five scenario projectors keyed by k = 1..5 '''
    units = scenario_unitaries(theta, phi)
    toms = OrderedDict()
    toms[1] = rotated_tomogram(units.u1)
    toms[2] = rotated_tomogram(units.u2)
    toms[3] = rotated_tomogram(np.eye(3))
    toms[4] = rotated_tomogram(units.u4)
    toms[5] = rotated_tomogram(units.u5)
    return toms


def tomographic_probabilities(theta, phi, grid=GridSpec()):
    ''' |<A_k|psi>|^2 for k = 1..5 from the fidelity of the tomograms '''
    tom_psi = rotated_tomogram(scenario_unitaries(theta, phi).u_psi)
    probs = [fidelity(tom_k, tom_psi, grid)
             for tom_k in scenario_tomograms(theta, phi).values()]
    logger.debug('tomographic probabilities: %s', probs)
    return np.array(probs)
