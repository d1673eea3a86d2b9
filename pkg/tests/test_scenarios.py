# -*- coding: utf-8 -*-

import numpy as np
import pytest

from tomoctx import scenarios


def _cyclic_overlaps(vectors):
    num = len(vectors)
    return [abs(np.vdot(vectors[idx], vectors[(idx + 1) % num]))
            for idx in range(num)]


@pytest.mark.parametrize('phi', [0.1698, 0.7, 1e-3, 0.78])
def test_kcbs_vectors_cyclically_orthogonal(phi):
    scenario = scenarios.kcbs_scenario(0.2366, phi)
    assert len(scenario.a) == 5
    assert max(_cyclic_overlaps(scenario.a)) <= 1e-12
    for vec in scenario.a:
        assert np.linalg.norm(vec) == pytest.approx(1.0, abs=1e-12)


def test_kcbs_fifth_vector_closed_form(default_angles):
    theta, phi = default_angles
    scenario = scenarios.kcbs_scenario(theta, phi)
    first = scenario.a[0]
    expected = np.array([-first[0], -first[1], first[2]])
    assert np.allclose(scenario.a[4], expected, atol=1e-14)
    assert np.allclose(scenario.psi, [np.sin(theta), np.cos(theta), 0.0])


def test_kcbs_phi_near_upper_limit():
    scenario = scenarios.kcbs_scenario(0.2366, np.pi / 4 - 1e-9)
    assert abs(scenario.a[0][0]) < 1e-4


@pytest.mark.parametrize('phi', [0.0, np.pi / 4, 0.9, -0.1])
def test_kcbs_phi_out_of_range(phi):
    with pytest.raises(ValueError, match='outside'):
        scenarios.kcbs_scenario(0.2366, phi)


@pytest.mark.parametrize('theta, phi', [(0.2366, 0.1698), (0.5, 0.7),
                                        (2.0, 0.3)])
def test_scenario_unitaries_first_columns(theta, phi):
    units = scenarios.scenario_unitaries(theta, phi)
    scenario = scenarios.kcbs_scenario(theta, phi)
    for mat in units:
        assert np.allclose(mat @ mat.conj().T, np.eye(3), atol=1e-12)
    for mat, vec in zip((units.u1, units.u2, units.u4, units.u5),
                        (scenario.a[0], scenario.a[1], scenario.a[3],
                         scenario.a[4])):
        assert np.allclose(mat[:, 0], vec, atol=1e-12)
    assert np.allclose(units.u_psi[:, 0], scenario.psi, atol=1e-14)


def test_scenario_unitary_u2():
    phi = 0.3
    cos, sin = np.cos(phi), np.sin(phi)
    expected = np.array([[0, 0, 1], [cos, sin, 0], [-sin, cos, 0]])
    assert np.allclose(scenarios.scenario_unitaries(0.0, phi).u2, expected)


def test_peres_mermin_square_contexts():
    square = scenarios.peres_mermin_square()
    assert list(square) == ['A', 'B', 'C', 'a', 'b', 'c',
                            'alpha', 'beta', 'gamma']
    for obs in square.values():
        assert np.allclose(obs @ obs, np.eye(4))
    for labels, sign in scenarios.PERES_MERMIN_CONTEXTS:
        for first in labels:
            for second in labels:
                left, right = square[first], square[second]
                assert np.allclose(left @ right, right @ left)
        product = np.eye(4)
        for label in labels:
            product = product @ square[label]
        assert np.allclose(product, sign * np.eye(4))


def test_peres_mermin_sign_count():
    signs = [sign for _, sign in scenarios.PERES_MERMIN_CONTEXTS]
    assert len(signs) == 6
    assert signs.count(-1.0) == 1


@pytest.mark.parametrize('num', [5, 7, 9])
def test_cyclic_directions(num):
    directions = scenarios.cyclic_directions(num)
    assert len(directions) == num
    assert max(_cyclic_overlaps(directions)) <= 1e-12
    for vec in directions:
        assert np.linalg.norm(vec) == pytest.approx(1.0)
    polar_cos = {round(vec[2], 12) for vec in directions}
    assert len(polar_cos) == 1


@pytest.mark.parametrize('num', [3, 4, 6])
def test_cyclic_directions_rejects(num):
    with pytest.raises(ValueError, match='odd count'):
        scenarios.cyclic_directions(num)


def test_pentagram_projectors_orthogonal():
    projectors = scenarios.pentagram_projectors()
    for idx in range(5):
        nxt = projectors[(idx + 1) % 5]
        assert np.allclose(projectors[idx] @ nxt, 0.0, atol=1e-12)
        assert np.trace(projectors[idx]).real == pytest.approx(1.0)


def test_ncycle_observables_spectrum():
    for obs in scenarios.ncycle_observables(7):
        eigs = np.sort(np.linalg.eigvalsh(obs))
        assert np.allclose(eigs, [-1.0, -1.0, 1.0], atol=1e-12)


def test_axis_state_along_z():
    assert np.allclose(scenarios.axis_state(0.0, 1.2), [0.0, 1.0, 0.0])


def test_create_scenario():
    assert isinstance(scenarios.create_scenario('kcbs'),
                      scenarios.KcbsScenario)
    assert 'gamma' in scenarios.create_scenario('peres-mermin')
    with pytest.raises(ValueError, match='Unknown scenario'):
        scenarios.create_scenario('gleason')
