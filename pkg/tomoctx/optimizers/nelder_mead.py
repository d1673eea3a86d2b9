# -*- coding: utf-8 -*-

from __future__ import absolute_import
from __future__ import print_function
from __future__ import division

import torch
from torch.optim.optimizer import Optimizer


class NelderMead(Optimizer):
    """Derivative-free simplex minimizer on a box.

    Every call to ``step`` performs one simplex update and leaves the
    parameter at the best vertex found so far. Trial points that leave the
    box are reflected back at the violated face. Reflection and clamping can
    flatten the simplex against a face; ``is_flat`` detects that and
    ``rebuild`` restores a full simplex around the best vertex.

    .. warning::
        Only a single parameter tensor is supported.

    Arguments:
        lower (tensor): lower box bound, same shape as the parameter
        upper (tensor): upper box bound, same shape as the parameter
        step_size (float or tensor): edge length of the initial simplex
            along each axis (default: 0.1)
        alpha (float): reflection coefficient (default: 1)
        gamma (float): expansion coefficient (default: 2)
        rho (float): contraction coefficient (default: 0.5)
        sigma (float): shrink coefficient (default: 0.5)
    """

    def __init__(self, params, lower=None, upper=None, step_size=0.1,
                 alpha=1.0, gamma=2.0, rho=0.5, sigma=0.5):
        defaults = dict(lower=lower, upper=upper, step_size=step_size,
                        alpha=alpha, gamma=gamma, rho=rho, sigma=sigma)
        super(NelderMead, self).__init__(params, defaults)

        if len(self.param_groups) != 1 or \
                len(self.param_groups[0]['params']) != 1:
            raise ValueError("NelderMead supports a single parameter tensor")
        self._param = self.param_groups[0]['params'][0]

    def _project(self, point):
        group = self.param_groups[0]
        lower, upper = group['lower'], group['upper']
        if lower is not None:
            point = torch.where(point < lower, 2 * lower - point, point)
        if upper is not None:
            point = torch.where(point > upper, 2 * upper - point, point)
        # a second excursion past the opposite face is clamped
        if lower is not None:
            point = torch.max(point, lower)
        if upper is not None:
            point = torch.min(point, upper)
        return point

    def _evaluate(self, closure, point):
        self._param.copy_(point.view_as(self._param))
        return float(closure())

    def _steps(self, start):
        step = torch.as_tensor(self.param_groups[0]['step_size'],
                               dtype=start.dtype)
        return step.expand(start.numel()) if step.dim() == 0 else step.view(-1)

    def _init_simplex(self, closure):
        start = self._project(self._param.detach().clone().view(-1))
        num = start.numel()
        step = self._steps(start)

        vertices = [start]
        for idx in range(num):
            vertex = start.clone()
            vertex[idx] = vertex[idx] + step[idx]
            vertices.append(self._project(vertex))
        simplex = torch.stack(vertices)
        values = torch.tensor([self._evaluate(closure, vertex)
                               for vertex in simplex], dtype=start.dtype)
        return simplex, values

    def _sort(self, state):
        values, order = torch.sort(state['values'], stable=True)
        state['values'] = values
        state['simplex'] = state['simplex'][order]

    @torch.no_grad()
    def step(self, closure):
        """Performs a single simplex update.

        Arguments:
            closure (callable): reevaluates the objective at the current
                parameter value and returns it; no gradients are needed.
        """
        group = self.param_groups[0]
        state = self.state[self._param]
        if 'simplex' not in state:
            state['simplex'], state['values'] = self._init_simplex(closure)
            state['n_iter'] = 0
            self._sort(state)

        simplex, values = state['simplex'], state['values']
        worst = simplex[-1]
        centroid = simplex[:-1].mean(dim=0)

        reflected = self._project(centroid + group['alpha'] * (centroid - worst))
        f_reflected = self._evaluate(closure, reflected)

        if values[0] <= f_reflected < values[-2]:
            simplex[-1], values[-1] = reflected, f_reflected
        elif f_reflected < values[0]:
            expanded = self._project(
                centroid + group['gamma'] * (reflected - centroid))
            f_expanded = self._evaluate(closure, expanded)
            if f_expanded < f_reflected:
                simplex[-1], values[-1] = expanded, f_expanded
            else:
                simplex[-1], values[-1] = reflected, f_reflected
        else:
            if f_reflected < values[-1]:
                contracted = self._project(
                    centroid + group['rho'] * (reflected - centroid))
                accept = self._evaluate(closure, contracted)
                accepted = accept <= f_reflected
            else:
                contracted = self._project(
                    centroid + group['rho'] * (worst - centroid))
                accept = self._evaluate(closure, contracted)
                accepted = accept < values[-1]

            if accepted:
                simplex[-1], values[-1] = contracted, accept
            else:
                best = simplex[0]
                for idx in range(1, simplex.shape[0]):
                    simplex[idx] = self._project(
                        best + group['sigma'] * (simplex[idx] - best))
                    values[idx] = self._evaluate(closure, simplex[idx])

        self._sort(state)
        state['n_iter'] += 1
        self._param.copy_(state['simplex'][0].view_as(self._param))
        return state['values'][0].clone()

    def simplex_values(self):
        """Returns (best, worst) objective values of the current simplex."""
        values = self.state[self._param]['values']
        return float(values[0]), float(values[-1])

    def _scaled_edges(self):
        simplex = self.state[self._param]['simplex']
        step = self._steps(simplex[0]).abs()
        active = step > 0
        return (simplex[1:] - simplex[0])[:, active] / step[active]

    def simplex_spread(self):
        """Largest vertex offset from the best vertex along each axis with a
        nonzero step, in units of that step."""
        edges = self._scaled_edges()
        if edges.numel() == 0:
            return edges.new_zeros(edges.shape[1])
        return edges.abs().max(dim=0)[0]

    def is_flat(self, flat_tol=1e-9):
        """True when the vertices span fewer dimensions than the simplex.

        A flat simplex can never leave the hyperplane it lies in, so the
        refinement would stall there.
        """
        edges = self._scaled_edges()
        if edges.numel() == 0:
            return False
        svals = torch.linalg.svdvals(edges)
        return bool(svals[0] > 0 and svals[-1] <= flat_tol * svals[0])

    @torch.no_grad()
    def rebuild(self, closure):
        """Restarts from a fresh simplex around the best vertex.

        The new edges have the initial step sizes; the best value is kept.
        """
        state = self.state[self._param]
        self._param.copy_(state['simplex'][0].view_as(self._param))
        state['simplex'], state['values'] = self._init_simplex(closure)
        self._sort(state)
        state['n_rebuilds'] = state.get('n_rebuilds', 0) + 1
        self._param.copy_(state['simplex'][0].view_as(self._param))
        return state['values'][0].clone()
