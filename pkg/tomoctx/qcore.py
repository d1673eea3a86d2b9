# -*- coding: utf-8 -*-

from __future__ import absolute_import
from __future__ import print_function
from __future__ import division

import json

import numpy as np

# Tolerances shared by every module. Dimensions stay small (<= 8), so a
# single set of absolute thresholds is enough.
TAU_NORM = 1e-10
TAU_HERM = 1e-10
TAU_TR = 1e-10
TAU_PSD = 1e-9
TAU_IM = 1e-10


def check_twice_j(two_j):
    if int(two_j) != two_j or two_j < 0:
        raise ValueError(
            'Twice-j must be a nonnegative integer, got: {}'.format(two_j))
    return int(two_j)


def magnetic_labels(two_j):
    ''' Returns the twice-m labels of a spin-j space in basis order

        Row/column 0 of every matrix in the package corresponds to m = j,
        the last one to m = -j.
    '''
    two_j = check_twice_j(two_j)
    return list(range(two_j, -two_j - 1, -2))


def label_index(two_j, two_m):
    two_j = check_twice_j(two_j)
    if int(two_m) != two_m or abs(two_m) > two_j or (two_j - two_m) % 2:
        raise ValueError(
            'Invalid magnetic label 2m={} for 2j={}'.format(two_m, two_j))
    return (two_j - int(two_m)) // 2


def as_matrix(entries, name='matrix'):
    mat = np.array(entries, dtype=np.complex128)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] < 1:
        raise ValueError(
            'The {} must be a square matrix, got shape {}'.format(
                name, mat.shape))
    if not np.all(np.isfinite(mat)):
        raise ValueError('The {} contains NaN or Inf entries'.format(name))
    return mat


def as_state(entries, name='state'):
    vec = np.array(entries, dtype=np.complex128).reshape(-1)
    if vec.size < 1 or not np.all(np.isfinite(vec)):
        raise ValueError('The {} must be a finite nonempty vector'.format(name))
    norm = np.linalg.norm(vec)
    if abs(norm - 1) > TAU_NORM:
        raise ValueError(
            'The {} is not normalized: norm = {:.3e}'.format(name, norm))
    return vec


def is_hermitian(mat, tol=TAU_HERM):
    return np.max(np.abs(mat - mat.conj().T)) <= tol


def check_density(rho, name='density operator'):
    rho = as_matrix(rho, name=name)
    if not is_hermitian(rho):
        raise ValueError('The {} is not Hermitian'.format(name))
    trace = np.trace(rho).real
    if abs(trace - 1) > TAU_TR:
        raise ValueError(
            'The {} has trace {:.12f} instead of 1'.format(name, trace))
    min_eig = np.linalg.eigvalsh(rho).min()
    if min_eig < -TAU_PSD:
        raise ValueError(
            'The {} has a negative eigenvalue {:.3e}'.format(name, min_eig))
    return rho


def is_density(mat):
    try:
        check_density(mat)
    except ValueError:
        return False
    return True


def check_projector(proj, name='projector'):
    proj = as_matrix(proj, name=name)
    if not is_hermitian(proj):
        raise ValueError('The {} is not Hermitian'.format(name))
    if np.max(np.abs(proj @ proj - proj)) > TAU_HERM:
        raise ValueError('The {} is not idempotent'.format(name))
    return proj


def check_unitary(mat, tol=TAU_NORM, name='unitary'):
    mat = as_matrix(mat, name=name)
    err = np.max(np.abs(mat @ mat.conj().T - np.eye(mat.shape[0])))
    if err > tol:
        raise ValueError(
            'The {} is not unitary: max |UU^+ - I| = {:.3e}'.format(name, err))
    return mat


def projector_from(state):
    vec = as_state(state)
    return np.outer(vec, vec.conj())


def expectation(rho, obs):
    ''' Tr[rho obs] for a density operator rho '''
    rho = check_density(rho)
    obs = as_matrix(obs, name='observable')
    if rho.shape != obs.shape:
        raise ValueError(
            'Dimension mismatch: rho is {} but the observable is {}'.format(
                rho.shape, obs.shape))
    value = np.trace(rho @ obs)
    if is_hermitian(obs) and abs(value.imag) > TAU_IM:
        raise ValueError(
            'Expectation of a Hermitian observable has imaginary part '
            '{:.3e}'.format(value.imag))
    return complex(value)


def tensor(a, b):
    return np.kron(as_matrix(a, name='left factor'),
                   as_matrix(b, name='right factor'))


def spin_generators(two_j):
    ''' Spin-j generators (Jx, Jy, Jz) in the m = j, ..., -j ordering '''
    labels = np.array(magnetic_labels(two_j))
    dim = len(labels)
    j_plus = np.zeros((dim, dim), dtype=np.complex128)
    for idx in range(1, dim):
        two_m = labels[idx]
        # <m+1|J+|m> sits one row above the diagonal
        j_plus[idx - 1, idx] = np.sqrt(
            (two_j * (two_j + 2) - two_m * (two_m + 2)) / 4.0)
    j_minus = j_plus.conj().T
    jx = (j_plus + j_minus) / 2.0
    jy = (j_plus - j_minus) / 2.0j
    jz = np.diag(labels / 2.0).astype(np.complex128)
    return jx, jy, jz


def spin1_generators():
    return spin_generators(2)


def cross_normalized(a, b):
    a = np.asarray(a, dtype=np.float64).reshape(3)
    b = np.asarray(b, dtype=np.float64).reshape(3)
    cross = np.cross(a, b)
    norm = np.linalg.norm(cross)
    if norm <= TAU_NORM:
        raise ValueError(
            'Degenerate input: the vectors are parallel (|a x b| = '
            '{:.3e})'.format(norm))
    return cross / norm


_CARTESIAN_TO_SPIN1 = np.array([[-1.0, 1.0j, 0.0],
                                [0.0, 0.0, np.sqrt(2.0)],
                                [1.0, 1.0j, 0.0]]) / np.sqrt(2.0)


def cartesian_state(direction):
    ''' Spin-1 state |n> for a real unit direction n, in the m basis

        |n> is the null vector of J.n, so <n|(J.l)^2|n> = 1 - (n.l)^2.
    '''
    direction = np.asarray(direction, dtype=np.float64).reshape(3)
    norm = np.linalg.norm(direction)
    if abs(norm - 1) > TAU_NORM:
        raise ValueError(
            'Direction is not a unit vector: norm = {:.3e}'.format(norm))
    return _CARTESIAN_TO_SPIN1 @ direction


def spherical_direction(polar, azimuth):
    return np.array([np.sin(polar) * np.cos(azimuth),
                     np.sin(polar) * np.sin(azimuth),
                     np.cos(polar)])


def random_state(dim, rng):
    vec = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return vec / np.linalg.norm(vec)


def random_density(dim, rng):
    ginibre = rng.standard_normal((dim, dim)) + \
        1j * rng.standard_normal((dim, dim))
    rho = ginibre @ ginibre.conj().T
    return rho / np.trace(rho).real


def random_hermitian(dim, rng):
    mat = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return (mat + mat.conj().T) / 2.0


def _encode(values):
    return [[float(val.real), float(val.imag)] for val in values]


def matrix_to_json(mat):
    mat = as_matrix(mat)
    return {'dim': int(mat.shape[0]),
            'entries': [_encode(row) for row in mat]}


def vector_to_json(vec):
    vec = np.asarray(vec, dtype=np.complex128).reshape(-1)
    return {'dim': int(vec.size), 'entries': _encode(vec)}


def _decode(pairs):
    arr = np.asarray(pairs, dtype=np.float64)
    if arr.shape[-1] != 2:
        raise ValueError('Complex entries must be [re, im] pairs')
    return arr[..., 0] + 1j * arr[..., 1]


def matrix_from_json(obj):
    mat = as_matrix(_decode(obj['entries']))
    if mat.shape[0] != obj['dim']:
        raise ValueError('Declared dim {} does not match {} rows'.format(
            obj['dim'], mat.shape[0]))
    return mat


def vector_from_json(obj):
    vec = _decode(obj['entries']).reshape(-1)
    if vec.size != obj['dim']:
        raise ValueError('Declared dim {} does not match {} entries'.format(
            obj['dim'], vec.size))
    return vec


def load_operator(path):
    ''' Reads an operator file; a vector file is read as its projector '''
    with open(path, 'r') as json_file:
        obj = json.load(json_file)
    entries = np.asarray(obj['entries'], dtype=np.float64)
    if entries.ndim == 2:
        return projector_from(vector_from_json(obj))
    return matrix_from_json(obj)
