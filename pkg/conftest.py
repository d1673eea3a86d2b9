# -*- coding: utf-8 -*-

import os.path as osp
import sys

import numpy as np
import pytest

sys.path.insert(0, osp.dirname(osp.abspath(__file__)))


@pytest.fixture
def rng():
    return np.random.default_rng(20190611)


@pytest.fixture
def default_angles():
    return 0.2366, 0.1698
