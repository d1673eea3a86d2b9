# -*- coding: utf-8 -*-

from __future__ import absolute_import
from __future__ import print_function
from __future__ import division

from .nelder_mead import NelderMead


def create_optimizer(parameters, optim_type='nelder-mead',
                     lower=None,
                     upper=None,
                     step_size=0.1,
                     alpha=1.0,
                     gamma=2.0,
                     rho=0.5,
                     sigma=0.5,
                     **kwargs):
    ''' Creates the optimizer

        Returns the optimizer and whether its closure needs a graph for
        higher-order derivatives (never, for the derivative-free ones).
    '''
    if optim_type == 'nelder-mead':
        return (NelderMead(parameters, lower=lower, upper=upper,
                           step_size=step_size, alpha=alpha, gamma=gamma,
                           rho=rho, sigma=sigma),
                False)
    else:
        raise ValueError('Optimizer {} not supported!'.format(optim_type))
