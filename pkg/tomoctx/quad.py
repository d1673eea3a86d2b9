# -*- coding: utf-8 -*-

from __future__ import absolute_import
from __future__ import print_function
from __future__ import division

import logging
from collections import namedtuple

import numpy as np

logger = logging.getLogger(__name__)

GridSpec = namedtuple('GridSpec', ['n_alpha', 'n_beta', 'n_gamma'])
GridSpec.__new__.__defaults__ = (64, 32, 64)


def check_grid(grid):
    for name, value in zip(grid._fields, grid):
        if int(value) != value or value < 1:
            raise ValueError(
                'Grid size {} must be a positive integer, got: {}'.format(
                    name, value))
    return GridSpec(*[int(value) for value in grid])


def periodic_nodes(num):
    ''' Uniform periodic rule on [0, 2pi): exact for trig degree < num '''
    nodes = 2.0 * np.pi * np.arange(num) / num
    weights = np.full(num, 2.0 * np.pi / num)
    return nodes, weights


def beta_nodes(num):
    ''' Gauss-Legendre in cos(beta); the sin(beta) weight is absorbed '''
    x, weights = np.polynomial.legendre.leggauss(num)
    return np.arccos(x), weights


def plot_grid(n_alpha, n_beta):
    alpha = 2.0 * np.pi * np.arange(n_alpha) / n_alpha
    beta = np.linspace(0.0, np.pi, n_beta)
    return np.meshgrid(alpha, beta, indexing='ij')


def _reduce(values, weights, num_axes, nodes):
    values = np.asarray(values)
    if values.ndim < num_axes:
        values = np.broadcast_to(values, weights.shape)
    if not np.all(np.isfinite(values)):
        bad = np.argwhere(~np.isfinite(values))[0][:num_axes]
        node = ', '.join('{}={:.6f}'.format(name, grid_vals[tuple(bad)])
                         for name, grid_vals in nodes)
        raise FloatingPointError(
            'Non-finite integrand at node ({})'.format(node))
    # Weights broadcast over any trailing (e.g. matrix) dimensions
    weights = weights.reshape(weights.shape + (1,) * (values.ndim - num_axes))
    return (values * weights).sum(axis=tuple(range(num_axes)))


def integrate_euler(func, grid=GridSpec(), collapse_gamma=False):
    ''' Integrates func(alpha, beta, gamma) over dalpha dgamma sin(beta) dbeta

        The measure has total volume 8 pi^2; normalization is up to the
        caller. func receives broadcast node arrays and may return trailing
        dimensions (matrix-valued integrands).

        Parameters
        ----------
        func: callable
            Vectorized integrand
        grid: GridSpec
            Number of nodes along alpha, beta and gamma
        collapse_gamma: bool, optional
            Replace the gamma rule by the factor 2 pi. Only valid for
            gamma-independent integrands
    '''
    grid = check_grid(grid)
    alpha, w_alpha = periodic_nodes(grid.n_alpha)
    beta, w_beta = beta_nodes(grid.n_beta)
    if collapse_gamma:
        aa, bb = np.meshgrid(alpha, beta, indexing='ij')
        gg = np.zeros_like(aa)
        weights = np.outer(w_alpha, w_beta) * 2.0 * np.pi
        num_axes = 2
    else:
        gamma, w_gamma = periodic_nodes(grid.n_gamma)
        aa, bb, gg = np.meshgrid(alpha, beta, gamma, indexing='ij')
        weights = (w_alpha[:, None, None] * w_beta[None, :, None] *
                   w_gamma[None, None, :])
        num_axes = 3
    logger.debug('integrating over %d euler nodes', aa.size)
    values = func(aa, bb, gg)
    nodes = [('alpha', aa), ('beta', bb), ('gamma', gg)]
    return _reduce(values, weights, num_axes, nodes)


def integrate_sphere(func, grid=GridSpec()):
    ''' Normalized sphere average of func(theta, phi); func = 1 gives 1 '''
    grid = check_grid(grid)
    phi, w_phi = periodic_nodes(grid.n_alpha)
    theta, w_theta = beta_nodes(grid.n_beta)
    pp, tt = np.meshgrid(phi, theta, indexing='ij')
    weights = np.outer(w_phi, w_theta) / (4.0 * np.pi)
    values = func(tt, pp)
    return _reduce(values, weights, 2, [('phi', pp), ('theta', tt)])
