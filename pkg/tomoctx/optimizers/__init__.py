# -*- coding: utf-8 -*-

from .optim_factory import create_optimizer
from .nelder_mead import NelderMead
