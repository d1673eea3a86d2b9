# -*- coding: utf-8 -*-

import numpy as np
import pytest
import torch
from scipy import ndimage

from tomoctx import search
from tomoctx.optimizers import NelderMead, create_optimizer
from tomoctx.search import SearchConfig


def _quadratic(point):
    return -float(np.sum((np.asarray(point) - 0.3) ** 2))


def test_maximize_quadratic():
    result = search.maximize(_quadratic, [(0.0, 1.0), (0.0, 1.0)],
                             SearchConfig(grid_resolution=11))
    assert np.allclose(result.argmax, [0.3, 0.3], atol=1e-6)
    assert result.value == pytest.approx(0.0, abs=1e-12)
    points, values = result.scan
    assert points.shape == (121, 2)
    assert result.value >= values.max()


def test_maximize_refines_off_grid():
    def objective(point):
        return -float((point[0] - 0.123) ** 2 + (point[1] - 0.456) ** 2)

    result = search.maximize(objective, [(0.0, 1.0), (0.0, 1.0)],
                             SearchConfig(grid_resolution=5,
                                          refine_iters=300))
    points, values = result.scan
    assert result.value > values.max()
    assert np.allclose(result.argmax, [0.123, 0.456], atol=1e-4)


def test_history_nondecreasing():
    result = search.maximize(_quadratic, [(0.0, 1.0)] * 2,
                             SearchConfig(grid_resolution=4, n_restarts=2))
    history = np.array(result.history)
    assert np.all(np.diff(history) >= 0.0)
    assert history[-1] == result.value


def test_maximize_deterministic():
    cfg = SearchConfig(grid_resolution=6, n_restarts=3, seed=11)
    first = search.maximize(_quadratic, [(0.0, 1.0)] * 2, cfg)
    second = search.maximize(_quadratic, [(0.0, 1.0)] * 2, cfg)
    assert np.array_equal(first.argmax, second.argmax)
    assert first.value == second.value
    assert first.history == second.history


def test_refinement_stays_in_box():
    visited = []

    def objective(point):
        visited.append(np.array(point))
        return -float(point[0])

    result = search.maximize(objective, [(0.0, 1.0)],
                             SearchConfig(grid_resolution=5))
    assert result.argmax[0] == 0.0
    visited = np.array(visited)
    assert visited.min() >= 0.0
    assert visited.max() <= 1.0


def test_non_finite_objective():
    with pytest.raises(FloatingPointError, match='Non-finite'):
        search.maximize(lambda point: np.nan, [(0.0, 1.0)],
                        SearchConfig(grid_resolution=3))


def _unit_box_optimizer(start, step_size=0.25):
    param = torch.tensor(start, dtype=torch.float64)
    lower = torch.zeros(len(start), dtype=torch.float64)
    upper = torch.ones(len(start), dtype=torch.float64)
    optimizer = NelderMead([param], lower=lower, upper=upper,
                           step_size=step_size)
    return param, optimizer


def test_refinement_from_face_reaches_interior_optimum():
    param, optimizer = _unit_box_optimizer([0.0, 0.5])

    def objective(point):
        return -float((point[0] - 0.123) ** 2 + (point[1] - 0.456) ** 2)

    with search.SearchMonitor(maxiters=300, tol=1e-12) as monitor:
        closure = monitor.create_search_closure(objective, param)
        loss = monitor.run_refinement(optimizer, closure)
    assert np.allclose(param.numpy(), [0.123, 0.456], atol=1e-4)
    assert loss == pytest.approx(0.0, abs=1e-8)


def test_flat_simplex_is_rebuilt():
    param, optimizer = _unit_box_optimizer([0.0625, 0.456])

    def closure():
        return (param[0] - 0.123) ** 2 + (param[1] - 0.456) ** 2

    optimizer.step(closure)
    state = optimizer.state[param]
    state['simplex'] = torch.tensor([[0.0625, 0.456], [0.0625, 0.457],
                                     [0.0625, 0.455]], dtype=torch.float64)
    state['values'] = torch.tensor([float(closure())] * 3,
                                   dtype=torch.float64)
    assert optimizer.is_flat()
    assert torch.all(optimizer.simplex_spread()[0] == 0.0)

    best = optimizer.rebuild(closure)
    assert not optimizer.is_flat()
    assert torch.allclose(optimizer.simplex_spread(),
                          torch.ones(2, dtype=torch.float64))
    assert best.item() == pytest.approx((0.123 - 0.0625) ** 2, rel=1e-12)
    assert state['n_rebuilds'] == 1


@pytest.mark.parametrize('cfg', [SearchConfig(grid_resolution=1),
                                 SearchConfig(tol=0.0),
                                 SearchConfig(xtol=-1.0),
                                 SearchConfig(n_restarts=-1)])
def test_check_config(cfg):
    with pytest.raises(ValueError):
        search.check_config(cfg)


@pytest.mark.parametrize('box', [[(1.0, 0.0)], [(0.0, np.inf)], [0.0, 1.0]])
def test_check_box(box):
    with pytest.raises(ValueError):
        search.check_box(box)


def test_pentagram_search():
    objective, box = search.create_objective('pentagram')
    result = search.maximize(objective, box, SearchConfig(grid_resolution=7))
    assert result.value == pytest.approx(np.sqrt(5.0) - 2.0, abs=1e-9)


def test_ncycle_search():
    objective, box = search.create_objective('ncycle', n=5)
    result = search.maximize(objective, box, SearchConfig(grid_resolution=7))
    assert result.value == pytest.approx(4 * np.sqrt(5.0) - 8.0, abs=1e-9)


def test_entropic_objective(default_angles):
    objective, box = search.create_objective('entropic')
    assert objective(np.array(default_angles)) > 0.08
    result = search.maximize(objective, box,
                             SearchConfig(grid_resolution=5,
                                          refine_iters=50))
    assert result.value >= result.scan[1].max()
    assert box[0][0] <= result.argmax[0] <= box[0][1]
    assert box[1][0] <= result.argmax[1] <= box[1][1]


def test_entropic_violation_region(default_angles):
    objective, box = search.create_objective('entropic')
    points, values = search.grid_scan(objective, box, 21)
    labels, count = ndimage.label((values > 0).reshape(21, 21))
    assert count == 1
    nearest = np.argmin(np.sum((points - np.array(default_angles)) ** 2,
                               axis=1))
    assert labels.reshape(-1)[nearest] == 1
    assert objective(np.array(default_angles)) > 0


def test_unknown_objective():
    with pytest.raises(ValueError, match='Unknown search objective'):
        search.create_objective('chsh')


def test_create_optimizer():
    param = torch.zeros(2, dtype=torch.float64)
    optimizer, create_graph = create_optimizer([param])
    assert isinstance(optimizer, NelderMead)
    assert not create_graph
    with pytest.raises(ValueError, match='not supported'):
        create_optimizer([param], optim_type='lbfgs')


def test_nelder_mead_single_tensor():
    with pytest.raises(ValueError, match='single parameter'):
        NelderMead([torch.zeros(1), torch.zeros(1)])


def test_nelder_mead_minimizes_rosenbrock():
    param = torch.tensor([-1.0, 1.5], dtype=torch.float64)
    lower = torch.full((2,), -2.0, dtype=torch.float64)
    upper = torch.full((2,), 2.0, dtype=torch.float64)
    optimizer = NelderMead([param], lower=lower, upper=upper, step_size=0.5)

    def closure():
        x, y = param[0], param[1]
        return (1 - x) ** 2 + 100 * (y - x ** 2) ** 2

    for _ in range(1000):
        loss = optimizer.step(closure)
    assert loss.item() < 1e-8
    assert torch.allclose(param, torch.ones(2, dtype=torch.float64),
                          atol=1e-3)
    best, worst = optimizer.simplex_values()
    assert best <= worst
