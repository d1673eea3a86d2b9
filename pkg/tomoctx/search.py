# -*- coding: utf-8 -*-

from __future__ import absolute_import
from __future__ import print_function
from __future__ import division

import itertools
import logging
from collections import namedtuple

import numpy as np
import torch
from tqdm import tqdm

from .contextuality import (entropic_chain, ncycle_value, pentagram_value,
                            scenario_joints)
from .optimizers import create_optimizer
from .scenarios import (axis_state, kcbs_scenario, ncycle_observables,
                        pentagram_directions)
from . import utils

logger = logging.getLogger(__name__)

SearchConfig = namedtuple('SearchConfig',
                          ['grid_resolution', 'refine_iters', 'tol', 'seed',
                           'n_restarts', 'optim_type', 'xtol'])
SearchConfig.__new__.__defaults__ = (21, 200, 1e-12, 0, 0, 'nelder-mead',
                                     1e-6)

SearchResult = namedtuple('SearchResult',
                          ['argmax', 'value', 'scan', 'history'])


def check_config(cfg):
    if int(cfg.grid_resolution) != cfg.grid_resolution or \
            cfg.grid_resolution < 2:
        raise ValueError('Grid resolution must be an integer >= 2, got: '
                         '{}'.format(cfg.grid_resolution))
    if not cfg.tol > 0 or not cfg.xtol > 0:
        raise ValueError('Tolerances must be positive, got: tol={}, xtol={}'
                         .format(cfg.tol, cfg.xtol))
    if cfg.refine_iters < 0 or cfg.n_restarts < 0:
        raise ValueError('Iteration and restart counts must be >= 0')
    return cfg


def check_box(box):
    box = np.asarray(box, dtype=np.float64)
    if box.ndim != 2 or box.shape[1] != 2 or box.shape[0] < 1:
        raise ValueError('The box must be a list of (low, high) pairs, got '
                         'shape {}'.format(box.shape))
    if not np.all(np.isfinite(box)) or np.any(box[:, 0] > box[:, 1]):
        raise ValueError('Invalid box bounds: {}'.format(box.tolist()))
    return box


def evaluate(objective, point):
    value = float(objective(point))
    if not np.isfinite(value):
        raise FloatingPointError(
            'Non-finite objective {} at point {}'.format(value, point.tolist()))
    return value


def grid_scan(objective, box, resolution, interactive=False):
    ''' Evaluates the objective on a uniform tensor grid over the box

        Returns
        -------
        points: np.ndarray, (resolution ** dim, dim)
        values: np.ndarray, (resolution ** dim,)
    '''
    box = check_box(box)
    axes = [np.linspace(low, high, int(resolution)) for low, high in box]
    points = np.array(list(itertools.product(*axes)), dtype=np.float64)
    values = np.empty(points.shape[0])
    for idx in tqdm(range(points.shape[0]), desc='Grid scan',
                    disable=not interactive):
        values[idx] = evaluate(objective, points[idx])
    return points, values


class SearchMonitor(object):
    def __init__(self, maxiters=200, tol=1e-12, xtol=1e-6, summary_steps=20,
                 **kwargs):
        super(SearchMonitor, self).__init__()

        self.maxiters = maxiters
        self.tol = tol
        self.xtol = xtol
        self.summary_steps = summary_steps

    def __enter__(self):
        self.steps = 0
        self.history = []
        self.rebuilds = 0
        return self

    def __exit__(self, exception_type, exception_value, traceback):
        if exception_type is None:
            logger.debug('refinement used %d objective evaluations and %d'
                         ' rebuilds', self.steps, self.rebuilds)

    def run_refinement(self, optimizer, closure):
        ''' Runs simplex updates until the simplex settles or the iteration
            limit is hit

            The simplex has settled when every vertex lies within xtol
            initial steps of the best one and the values agree to tol. A
            settled or flat simplex is rebuilt around its best vertex. The
            loop ends once a rebuilt simplex settles again without improving
            on the value it was rebuilt from.

            Parameters
            ----------
                optimizer: torch.optim.Optimizer
                    A derivative-free optimizer exposing simplex_values(),
                    simplex_spread(), is_flat() and rebuild()
                closure: function
                    Returns the loss (negated objective) at the parameter
            Returns
            -------
                loss: float
                    The best loss value reached
        '''
        anchor = None
        for n in range(self.maxiters):
            loss = optimizer.step(closure)

            if torch.isnan(loss).any() or torch.isinf(loss).any():
                raise FloatingPointError(
                    'Non-finite loss at refinement step {}'.format(n))

            best = loss.item()
            if self.history:
                best = min(best, self.history[-1])
            self.history.append(best)

            if n % self.summary_steps == 0:
                logger.debug('step %d: loss %.12g', n, best)

            best_val, worst_val = optimizer.simplex_values()
            settled = utils.rel_change(worst_val, best_val) <= self.tol and \
                bool((optimizer.simplex_spread() <= self.xtol).all())
            if not settled and not optimizer.is_flat():
                continue
            if settled and anchor is not None and \
                    utils.rel_change(anchor, best_val) <= self.tol:
                break
            anchor = best_val
            optimizer.rebuild(closure)
            self.rebuilds += 1
            logger.debug('step %d: simplex rebuilt at loss %.12g', n,
                         best_val)

        return self.history[-1] if self.history else None

    def create_search_closure(self, objective, param):
        def search_func():
            point = param.detach().cpu().numpy().copy()
            value = evaluate(objective, point)
            self.steps += 1
            return torch.tensor(-value, dtype=param.dtype)

        return search_func


def maximize(objective, box, cfg=SearchConfig(), interactive=False):
    ''' Grid scan followed by simplex refinement from the best grid points

        Parameters
        ----------
        objective: callable
            Maps a float64 vector to a finite float
        box: list of (low, high)
            Per-axis bounds; refinement reflects at the faces
        cfg: SearchConfig
            Scan resolution, refinement budget, tolerance, seed and the
            number of extra random restarts

        Returns
        -------
        result: SearchResult
            argmax, value, the full grid scan (points, values) and the
            nondecreasing history of best values
    '''
    cfg = check_config(cfg)
    box = check_box(box)
    points, values = grid_scan(objective, box, cfg.grid_resolution,
                               interactive=interactive)

    best_idx = int(np.argmax(values))
    best_point, best_value = points[best_idx].copy(), float(values[best_idx])
    logger.info('best grid value %.12g at %s', best_value,
                best_point.tolist())

    lower = utils.to_tensor(box[:, 0])
    upper = utils.to_tensor(box[:, 1])
    spacing = (upper - lower) / (cfg.grid_resolution - 1)

    starts = [utils.to_tensor(best_point)]
    generator = torch.Generator().manual_seed(int(cfg.seed))
    for _ in range(cfg.n_restarts):
        unit = torch.rand(box.shape[0], generator=generator,
                          dtype=torch.float64)
        starts.append(lower + (upper - lower) * unit)

    history = [best_value]
    for start in starts:
        param = start.clone()
        optimizer, _ = create_optimizer([param], optim_type=cfg.optim_type,
                                        lower=lower, upper=upper,
                                        step_size=spacing)
        with SearchMonitor(maxiters=cfg.refine_iters, tol=cfg.tol,
                           xtol=cfg.xtol) as monitor:
            closure = monitor.create_search_closure(objective, param)
            loss = monitor.run_refinement(optimizer, closure)

        for step_loss in monitor.history:
            history.append(max(history[-1], -step_loss))
        if loss is not None and -loss > best_value:
            best_value = -loss
            best_point = param.detach().cpu().numpy().copy()

    return SearchResult(best_point, best_value, (points, values), history)


def create_objective(family='entropic', n=5, **kwargs):
    ''' Objectives whose positive values mean a violated inequality '''
    if family == 'entropic':
        def objective(point):
            scenario = kcbs_scenario(point[0], point[1])
            return entropic_chain(scenario_joints(scenario)).margin
        box = [(0.0, np.pi / 2), (1e-3, np.pi / 4 - 1e-3)]
    elif family == 'pentagram':
        directions = pentagram_directions()

        def objective(point):
            return pentagram_value(directions,
                                   axis_state(point[0], point[1])).margin
        box = [(0.0, np.pi), (0.0, 2 * np.pi)]
    elif family == 'ncycle':
        observables = ncycle_observables(n)

        def objective(point):
            return ncycle_value(observables,
                                axis_state(point[0], point[1])).margin
        box = [(0.0, np.pi), (0.0, 2 * np.pi)]
    else:
        raise ValueError('Unknown search objective: {}'.format(family))
    return objective, box
