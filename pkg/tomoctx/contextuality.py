# -*- coding: utf-8 -*-

from __future__ import absolute_import
from __future__ import print_function
from __future__ import division

import itertools
import logging
from collections import OrderedDict, namedtuple

import numpy as np

from .qcore import (as_matrix, as_state, cartesian_state, check_density,
                    is_hermitian, projector_from, spin1_generators)
from .scenarios import (DEFAULT_PHI, DEFAULT_THETA, PERES_MERMIN_CONTEXTS,
                        kcbs_scenario, ncycle_observables,
                        pentagram_directions, peres_mermin_square)

logger = logging.getLogger(__name__)

PROB_TOL = 1e-10
PROB_CLAMP = 1e-12
MARGINAL_TOL = 1e-9
ORTHO_TOL = 1e-8
NORM_TOL = 1e-8
VIOLATION_TOL = 1e-10
SPECTRUM_TOL = 1e-8

NCycleBounds = namedtuple('NCycleBounds',
                          ['classical', 'quantum', 'quantum_dim3'])


class InequalityReport(namedtuple('InequalityReport',
                                  ['name', 'value', 'bound', 'direction',
                                   'violated', 'margin'])):
    ''' Value of an inequality against its bound

        margin is positive exactly when the value lies on the wrong side of
        the bound, and measures by how much.
    '''
    __slots__ = ()

    def to_dict(self):
        out = OrderedDict()
        for key, value in zip(self._fields, self):
            if isinstance(value, (float, np.floating)):
                value = float(value)
            elif isinstance(value, np.bool_):
                value = bool(value)
            out[key] = value
        return out


def make_report(name, value, bound, direction):
    value = float(value)
    if direction == '>=':
        margin = bound - value
    elif direction == '<=':
        margin = value - bound
    else:
        raise ValueError('Unknown inequality direction: {}'.format(direction))
    return InequalityReport(name, value, float(bound), direction,
                            bool(margin > VIOLATION_TOL), float(margin))


class OutcomeDistribution(object):
    ''' Probabilities over labelled outcomes

        Joint distributions label their outcomes with one character per
        variable, e.g. '01' for A=0, B=1.
    '''

    def __init__(self, outcomes, probs):
        super(OutcomeDistribution, self).__init__()
        outcomes = tuple(str(label) for label in outcomes)
        probs = np.asarray(probs, dtype=np.float64).reshape(-1)
        if len(outcomes) != probs.size:
            raise ValueError('Got {} outcomes but {} probabilities'.format(
                len(outcomes), probs.size))
        if len(set(outcomes)) != len(outcomes):
            raise ValueError('Duplicate outcome labels: {}'.format(outcomes))
        if not np.all(np.isfinite(probs)):
            raise ValueError('Non-finite probability in {}'.format(probs))
        if np.any(probs < -PROB_CLAMP):
            raise ValueError('Negative probability {:.3e}'.format(probs.min()))
        probs = np.clip(probs, 0.0, None)
        total = probs.sum()
        if abs(total - 1.0) > PROB_TOL:
            raise ValueError(
                'Probabilities sum to {:.12f} instead of 1'.format(total))
        self.outcomes = outcomes
        self.probs = probs

    def __len__(self):
        return len(self.outcomes)

    def __repr__(self):
        return 'OutcomeDistribution({})'.format(
            ', '.join('{}: {:.6g}'.format(label, prob)
                      for label, prob in zip(self.outcomes, self.probs)))

    @property
    def num_vars(self):
        return len(self.outcomes[0])

    def marginal(self, position):
        ''' Distribution of the variable at the given label position '''
        totals = OrderedDict()
        for label, prob in zip(self.outcomes, self.probs):
            key = label[position]
            totals[key] = totals.get(key, 0.0) + prob
        keys = sorted(totals)
        return OutcomeDistribution(keys, [totals[key] for key in keys])

    def prob(self, label):
        try:
            return self.probs[self.outcomes.index(label)]
        except ValueError:
            return 0.0


def shannon_entropy(dist):
    ''' Entropy in bits; zero-probability outcomes contribute nothing '''
    probs = dist.probs[dist.probs > 0]
    return float(max(-np.sum(probs * np.log2(probs)), 0.0))


def conditional_entropy(joint, given=1):
    ''' H(A|B) of a two-variable joint, B at label position given

        Computed both as H(AB) - H(B) and as sum_b P(b) H(A|B=b); the two
        must agree to 1e-12.
    '''
    if joint.num_vars != 2 or given not in (0, 1):
        raise ValueError('Conditional entropy needs a two-variable joint '
                         'and given in (0, 1)')
    cond = joint.marginal(given)
    by_difference = shannon_entropy(joint) - shannon_entropy(cond)

    other = 1 - given
    weighted = 0.0
    for value, p_b in zip(cond.outcomes, cond.probs):
        if p_b <= 0:
            continue
        rows = [(label[other], prob) for label, prob in
                zip(joint.outcomes, joint.probs) if label[given] == value]
        conditional = OutcomeDistribution([label for label, _ in rows],
                                          [prob / p_b for _, prob in rows])
        weighted += p_b * shannon_entropy(conditional)

    if abs(weighted - by_difference) > 1e-12:
        raise ValueError(
            'Conditional entropy identities disagree: {:.15f} vs '
            '{:.15f}'.format(weighted, by_difference))
    return max(by_difference, 0.0)


def _overlap_prob(vec, psi):
    return float(abs(np.vdot(vec, psi)) ** 2)


def joint_from_projectors(a_i, a_next, psi):
    ''' Joint of two orthogonal rank-1 projectors measured on psi

        Outcomes '00', '10', '01', '11'; the first character belongs to
        a_i. The '11' cell is zero since the projectors are orthogonal.
    '''
    a_i = as_state(a_i, name='first vector')
    a_next = as_state(a_next, name='second vector')
    psi = as_state(psi)
    overlap = abs(np.vdot(a_i, a_next))
    if overlap > ORTHO_TOL:
        raise ValueError(
            'Projector vectors are not orthogonal: |<a|b>| = {:.3e}'.format(
                overlap))
    p_i = _overlap_prob(a_i, psi)
    p_next = _overlap_prob(a_next, psi)
    return OutcomeDistribution(['00', '10', '01', '11'],
                               [1.0 - p_i - p_next, p_i, p_next, 0.0])


def _check_chain_marginals(joints):
    for idx, joint in enumerate(joints):
        following = joints[(idx + 1) % len(joints)]
        left = joint.marginal(1)
        right = following.marginal(0)
        if left.outcomes != right.outcomes or \
                np.max(np.abs(left.probs - right.probs)) > MARGINAL_TOL:
            raise ValueError(
                'Inconsistent marginals between pair {} and pair {}'.format(
                    idx + 1, (idx + 1) % len(joints) + 1))


def entropic_chain(joints):
    ''' Chain inequality H(A1|An) <= sum_i H(Ai|Ai+1) over cyclic pairs

        Parameters
        ----------
        joints: list of OutcomeDistribution
            Pair joints (1,2), (2,3), ..., (n,1); the first label character
            is the first variable of the pair

        Returns
        -------
        report: InequalityReport
            value = H(A1|An) - sum_i H(Ai|Ai+1), violated when positive
    '''
    if len(joints) < 3:
        raise ValueError('The entropic chain needs at least 3 pair joints')
    _check_chain_marginals(joints)
    chain = sum(conditional_entropy(joint, given=1) for joint in joints[:-1])
    # the closing joint is (An, A1): condition A1 on its first variable
    closing = conditional_entropy(joints[-1], given=0)
    logger.debug('entropic chain: closing %.6f, sum %.6f', closing, chain)
    return make_report('entropic', closing - chain, 0.0, '<=')


def scenario_joints(scenario, probs=None):
    ''' The five cyclic pair joints of a KCBS scenario

        probs may hold precomputed single-projector probabilities (e.g.
        from tomograms); by default they come from inner products.
    '''
    vectors = scenario.a
    if probs is None:
        return [joint_from_projectors(vectors[idx], vectors[(idx + 1) % 5],
                                      scenario.psi) for idx in range(5)]
    joints = []
    for idx in range(5):
        p_i, p_next = probs[idx], probs[(idx + 1) % 5]
        joints.append(OutcomeDistribution(
            ['00', '10', '01', '11'], [1.0 - p_i - p_next, p_i, p_next, 0.0]))
    return joints


def pair_marginals(joint5):
    ''' Cyclic pair joints of a distribution over five binary variables

        joint5 is an array of shape (2, 2, 2, 2, 2) indexed by the outcomes.
    '''
    joint5 = np.asarray(joint5, dtype=np.float64)
    num = joint5.ndim
    if joint5.shape != (2,) * num:
        raise ValueError('Expected a (2,)*n array, got shape {}'.format(
            joint5.shape))
    pairs = []
    for idx in range(num):
        nxt = (idx + 1) % num
        others = tuple(ax for ax in range(num) if ax not in (idx, nxt))
        table = joint5.sum(axis=others)
        # sum keeps the remaining axes in increasing order
        if nxt < idx:
            table = table.T
        labels, probs = [], []
        for first, second in itertools.product((0, 1), repeat=2):
            labels.append('{}{}'.format(first, second))
            probs.append(table[first, second])
        pairs.append(OutcomeDistribution(labels, probs))
    return pairs


def _as_density(state, dim):
    mat = np.asarray(state)
    if mat.ndim == 2:
        rho = check_density(mat)
    else:
        rho = projector_from(mat)
    if rho.shape[0] != dim:
        raise ValueError('Expected a state of dim {}, got {}'.format(
            dim, rho.shape[0]))
    return rho


def pentagram_value(directions, psi):
    ''' Sum of <(J.l_k)^2> for five cyclically orthogonal directions '''
    directions = [np.asarray(vec, dtype=np.float64).reshape(3)
                  for vec in directions]
    if len(directions) != 5:
        raise ValueError('The pentagram needs 5 directions, got {}'.format(
            len(directions)))
    for idx, direction in enumerate(directions):
        norm = np.linalg.norm(direction)
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(
                'Direction {} is not a unit vector: |l| = {:.12f}'.format(
                    idx + 1, norm))
    for idx in range(5):
        dot = abs(np.dot(directions[idx], directions[(idx + 1) % 5]))
        if dot > ORTHO_TOL:
            raise ValueError(
                'Directions {} and {} are not orthogonal: {:.3e}'.format(
                    idx + 1, (idx + 1) % 5 + 1, dot))
    rho = _as_density(psi, 3)
    gens = spin1_generators()
    value = 0.0
    for direction in directions:
        spin = sum(comp * gen for comp, gen in zip(direction, gens))
        value += np.trace(rho @ spin @ spin).real
    return make_report('pentagram', value, 3.0, '>=')


def omega_bound(num):
    cos_pi = np.cos(np.pi / num)
    return -(3 * num * cos_pi - num) / (1 + cos_pi)


def xi_bound(num):
    return -num * np.cos(np.pi / num)


def ncycle_bounds(num):
    ''' Classical and minimal quantum values of the n-cycle sum '''
    if int(num) != num or num < 4:
        raise ValueError('The n-cycle needs n >= 4, got: {}'.format(num))
    num = int(num)
    classical = -(num - 2.0)
    if num % 2:
        quantum = omega_bound(num)
        return NCycleBounds(classical, quantum, quantum)
    return NCycleBounds(classical, xi_bound(num), -1.0 + xi_bound(num - 1))


def ncycle_sign(num):
    return 1.0 if (num - 1) % 2 == 0 else -1.0


def classical_ncycle_minimum(num):
    ''' Exhaustive minimum over all +-1 assignments '''
    if num < 2:
        raise ValueError('Need at least 2 variables, got: {}'.format(num))
    sign = ncycle_sign(num)
    best = None
    for signs in itertools.product((-1, 1), repeat=num):
        total = sum(signs[idx] * signs[idx + 1] for idx in range(num - 1))
        total += sign * signs[-1] * signs[0]
        best = total if best is None else min(best, total)
    return best


def _check_dichotomic(obs, idx):
    obs = as_matrix(obs, name='observable {}'.format(idx + 1))
    if not is_hermitian(obs, tol=SPECTRUM_TOL):
        raise ValueError('Observable {} is not Hermitian'.format(idx + 1))
    eigs = np.linalg.eigvalsh(obs)
    if np.max(np.abs(np.abs(eigs) - 1.0)) > SPECTRUM_TOL:
        raise ValueError(
            'Observable {} has eigenvalues outside {{-1, +1}}: {}'.format(
                idx + 1, eigs))
    return obs


def ncycle_value(observables, rho):
    ''' <chi> = sum <A_i A_i+1> + (-1)^(n-1) <A_n A_1> '''
    num = len(observables)
    observables = [_check_dichotomic(obs, idx)
                   for idx, obs in enumerate(observables)]
    bounds = ncycle_bounds(num)
    rho = _as_density(rho, observables[0].shape[0])
    value = 0.0
    for idx in range(num):
        left = observables[idx]
        right = observables[(idx + 1) % num]
        comm = np.max(np.abs(left @ right - right @ left))
        if comm > SPECTRUM_TOL:
            raise ValueError(
                'Observables {} and {} do not commute: {:.3e}'.format(
                    idx + 1, (idx + 1) % num + 1, comm))
        sign = ncycle_sign(num) if idx == num - 1 else 1.0
        value += sign * np.trace(rho @ left @ right).real
    return make_report('ncycle', value, bounds.classical, '>=')


def peres_mermin(rho):
    ''' Peres-Mermin sum over the square's six contexts; bound 4 '''
    rho = _as_density(rho, 4)
    square = peres_mermin_square()
    value = 0.0
    for labels, sign in PERES_MERMIN_CONTEXTS:
        product = np.eye(4, dtype=np.complex128)
        for label in labels:
            product = product @ square[label]
        value += sign * np.trace(rho @ product).real
    return make_report('peres-mermin', value, 4.0, '<=')


def kcbs_dichotomic(means):
    ''' KCBS sum of five pair correlations against the bound -3 '''
    means = np.asarray(means, dtype=np.float64).reshape(-1)
    if means.size != 5:
        raise ValueError('KCBS needs 5 correlations, got {}'.format(
            means.size))
    if np.any(np.abs(means) > 1.0 + PROB_TOL):
        raise ValueError('Correlations must lie in [-1, 1]: {}'.format(means))
    return make_report('kcbs', np.sum(means), -3.0, '>=')


def dichotomic_observable(state):
    ''' 2|A><A| - I '''
    proj = projector_from(state)
    return 2.0 * proj - np.eye(proj.shape[0])


def kcbs_correlations(scenario):
    ''' <A_i A_i+1> of the scenario's dichotomic observables on psi '''
    observables = [dichotomic_observable(vec) for vec in scenario.a]
    rho = projector_from(scenario.psi)
    return np.array([
        np.trace(rho @ observables[idx] @ observables[(idx + 1) % 5]).real
        for idx in range(5)])


def create_inequality(family='entropic', theta=DEFAULT_THETA, phi=DEFAULT_PHI,
                      n=5, rho=None, **kwargs):
    ''' Report of one inequality family at the given scenario settings

        The pentagram and n-cycle families are evaluated on the state along
        the cone axis of the cyclic directions.
    '''
    if family == 'entropic':
        return entropic_chain(scenario_joints(kcbs_scenario(theta, phi)))
    elif family == 'kcbs':
        return kcbs_dichotomic(kcbs_correlations(kcbs_scenario(theta, phi)))
    elif family == 'pentagram':
        return pentagram_value(pentagram_directions(),
                               cartesian_state([0.0, 0.0, 1.0]))
    elif family == 'ncycle':
        return ncycle_value(ncycle_observables(n),
                            cartesian_state([0.0, 0.0, 1.0]))
    elif family == 'peres-mermin':
        if rho is None:
            rho = np.eye(4) / 4.0
        return peres_mermin(rho)
    else:
        raise ValueError('Unknown inequality family: {}'.format(family))
