# -*- coding: utf-8 -*-

from __future__ import absolute_import
from __future__ import print_function
from __future__ import division

from collections import OrderedDict, namedtuple

import numpy as np

from .qcore import (as_state, cartesian_state, check_unitary,
                    cross_normalized, spherical_direction)

DEFAULT_THETA = 0.2366
DEFAULT_PHI = 0.1698
ORTHO_TOL = 1e-10

KcbsScenario = namedtuple('KcbsScenario', ['theta', 'phi', 'psi', 'a'])
ScenarioUnitaries = namedtuple('ScenarioUnitaries',
                               ['u1', 'u2', 'u4', 'u5', 'u_psi'])

_PAULI = {
    'i': np.eye(2, dtype=np.complex128),
    'x': np.array([[0, 1], [1, 0]], dtype=np.complex128),
    'y': np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    'z': np.array([[1, 0], [0, -1]], dtype=np.complex128),
}

# label -> (first qubit, second qubit)
_SQUARE_LAYOUT = OrderedDict([
    ('A', 'xi'), ('B', 'ix'), ('C', 'xx'),
    ('a', 'iy'), ('b', 'yi'), ('c', 'yy'),
    ('alpha', 'xy'), ('beta', 'yx'), ('gamma', 'zz'),
])

# (labels, sign) of the six terms of the Peres-Mermin sum
PERES_MERMIN_CONTEXTS = (
    (('A', 'B', 'C'), 1.0),
    (('b', 'c', 'a'), 1.0),
    (('gamma', 'alpha', 'beta'), 1.0),
    (('A', 'alpha', 'a'), 1.0),
    (('b', 'B', 'beta'), 1.0),
    (('gamma', 'c', 'C'), -1.0),
)


def check_phi(phi):
    if not 0.0 < phi < np.pi / 4:
        raise ValueError(
            'phi={} is outside (0, pi/4): sqrt(cos(2*phi)) is undefined '
            'or the vectors degenerate'.format(phi))
    return float(phi)


def kcbs_scenario(theta=DEFAULT_THETA, phi=DEFAULT_PHI):
    ''' The five cyclically orthogonal qutrit vectors and the test state

        Parameters
        ----------
        theta: float
            Angle of the state (sin theta, cos theta, 0)
        phi: float
            Angle of the vector family, in (0, pi/4)

        Returns
        -------
        scenario: KcbsScenario
            A5 is the normalized cross product of A1 and A4
    '''
    phi = check_phi(phi)
    cos_phi, sin_phi = np.cos(phi), np.sin(phi)
    root = np.sqrt(np.cos(2 * phi))
    a1 = np.array([root / (np.sqrt(2.0) * cos_phi),
                   np.tan(phi) / np.sqrt(2.0),
                   1.0 / np.sqrt(2.0)])
    a2 = np.array([0.0, cos_phi, -sin_phi])
    a3 = np.array([1.0, 0.0, 0.0])
    a4 = np.array([0.0, cos_phi, sin_phi])
    a5 = cross_normalized(a1, a4)
    psi = np.array([np.sin(theta), np.cos(theta), 0.0])

    vectors = [as_state(vec, name='vector A{}'.format(idx + 1))
               for idx, vec in enumerate((a1, a2, a3, a4, a5))]
    for idx in range(5):
        overlap = abs(np.vdot(vectors[idx], vectors[(idx + 1) % 5]))
        if overlap > ORTHO_TOL:
            raise ValueError('A{} and A{} are not orthogonal: {:.3e}'.format(
                idx + 1, (idx + 1) % 5 + 1, overlap))
    return KcbsScenario(float(theta), phi, as_state(psi), vectors)


def scenario_unitaries(theta=DEFAULT_THETA, phi=DEFAULT_PHI):
    ''' Unitaries whose first columns are A1, A2, A4, A5 and psi '''
    phi = check_phi(phi)
    cos_phi, sin_phi, tan_phi = np.cos(phi), np.sin(phi), np.tan(phi)
    cos_2phi = np.cos(2 * phi)
    root = np.sqrt(cos_2phi)
    mid = np.sqrt(3 * cos_phi ** 2 - 1)
    last = np.sqrt(3 * cos_2phi + 1)

    u1 = np.array([
        [root / (np.sqrt(2.0) * cos_phi), -cos_phi / mid,
         tan_phi * np.sqrt(cos_2phi / (3 * cos_2phi + 1))],
        [tan_phi / np.sqrt(2.0), 0.0,
         -(2 * cos_phi - tan_phi * sin_phi) / last],
        [1.0 / np.sqrt(2.0), root / mid, sin_phi / last]])
    u2 = np.array([[0.0, 0.0, 1.0],
                   [cos_phi, sin_phi, 0.0],
                   [-sin_phi, cos_phi, 0.0]])
    u4 = np.array([[0.0, 0.0, 1.0],
                   [cos_phi, -sin_phi, 0.0],
                   [sin_phi, cos_phi, 0.0]])
    # U5 flips the first two rows of U1
    u5 = np.diag([-1.0, -1.0, 1.0]) @ u1
    u_psi = np.array([[np.sin(theta), -np.cos(theta), 0.0],
                      [np.cos(theta), np.sin(theta), 0.0],
                      [0.0, 0.0, 1.0]])

    mats = [check_unitary(mat, name=name) for mat, name in
            zip((u1, u2, u4, u5, u_psi), ScenarioUnitaries._fields)]
    return ScenarioUnitaries(*mats)


def peres_mermin_square():
    ''' The nine two-qubit observables keyed by their labels '''
    square = OrderedDict()
    for label, (first, second) in _SQUARE_LAYOUT.items():
        square[label] = np.kron(_PAULI[first], _PAULI[second])
    return square


def cyclic_directions(num=5):
    ''' num unit vectors on a cone with consecutive ones orthogonal

        The azimuth advances by pi (num - 1) / num; the opening angle
        satisfies cos^2 = cos(pi/num) / (1 + cos(pi/num)).
    '''
    if num < 5 or num % 2 == 0:
        raise ValueError(
            'Cyclic orthogonal directions need an odd count >= 5, '
            'got: {}'.format(num))
    cos_pi = np.cos(np.pi / num)
    polar = np.arccos(np.sqrt(cos_pi / (1.0 + cos_pi)))
    step = np.pi * (num - 1) / num
    return [spherical_direction(polar, step * idx) for idx in range(num)]


def pentagram_directions():
    return cyclic_directions(5)


def pentagram_projectors(directions=None):
    if directions is None:
        directions = pentagram_directions()
    projectors = []
    for direction in directions:
        state = cartesian_state(direction)
        projectors.append(np.outer(state, state.conj()))
    return projectors


def ncycle_observables(num=5):
    ''' Dichotomic observables 2|l_k><l_k| - I on the cyclic directions '''
    return [2.0 * proj - np.eye(3) for proj in
            pentagram_projectors(cyclic_directions(num))]


def axis_state(polar, azimuth):
    ''' Cartesian spin-1 state along a polar/azimuth direction '''
    return cartesian_state(spherical_direction(polar, azimuth))


def create_scenario(name='kcbs', theta=DEFAULT_THETA, phi=DEFAULT_PHI,
                    **kwargs):
    if name == 'kcbs':
        return kcbs_scenario(theta, phi)
    elif name == 'peres-mermin':
        return peres_mermin_square()
    else:
        raise ValueError('Unknown scenario: {}'.format(name))
