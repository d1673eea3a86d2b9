# -*- coding: utf-8 -*-

from __future__ import absolute_import
from __future__ import print_function
from __future__ import division

import itertools
import logging
import os.path as osp
import sys
import time
from collections import OrderedDict, namedtuple

import numpy as np
import yaml
from tqdm import tqdm

from .cmd_parser import parse_config
from .contextuality import (classical_ncycle_minimum, create_inequality,
                            entropic_chain, ncycle_bounds, ncycle_value,
                            pentagram_value, peres_mermin, scenario_joints)
from .qcore import (is_density, load_operator, magnetic_labels,
                    projector_from, random_density, random_hermitian)
from .quad import GridSpec, check_grid, plot_grid
from .scenarios import (kcbs_scenario, ncycle_observables,
                        pentagram_directions)
from .search import SearchConfig, create_objective, maximize
from .tomography import (U3Params, dual_symbol, dual_symbol_closed_form,
                         pair, projector_tomogram_closed_form, reconstruct,
                         scenario_tomograms, simplex_points,
                         state_tomogram_closed_form, tomogram_of,
                         tomographic_probabilities, unitary_tomogram)
from . import utils

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s %(name)s %(levelname)s: %(message)s'

CheckResult = namedtuple('CheckResult',
                         ['name', 'passed', 'max_error', 'tolerance'])


def emit_json(obj, output=None):
    if output is None:
        print(utils.dumps_json(obj))
    else:
        utils.dump_json(output, obj)


def grid_from_args(grid_alpha=64, grid_beta=32, grid_gamma=64, **kwargs):
    return check_grid(GridSpec(grid_alpha, grid_beta, grid_gamma))


def cmd_tomogram(scenario='kcbs', operator=None, theta=0.5, phi=0.7,
                 two_j=2, simplex=False, output=None, **kwargs):
    ''' Exports tomograms on the plotting grid as CSV rows '''
    if operator is not None:
        toms = OrderedDict([(1, tomogram_of(load_operator(operator), two_j))])
    elif scenario == 'kcbs':
        if two_j != 2:
            raise ValueError('The kcbs scenario lives on a qutrit, got '
                             '2j={}'.format(two_j))
        toms = scenario_tomograms(theta, phi)
    elif scenario == 'peres-mermin':
        raise ValueError('The peres-mermin square acts on two qubits and has '
                         'no spin tomograms; pass a spin state or '
                         'operator with --operator instead')
    else:
        raise ValueError('Unknown scenario: {}'.format(scenario))

    alpha, beta = plot_grid(kwargs.get('grid_alpha', 64),
                            kwargs.get('grid_beta', 32))
    rows = []
    if simplex:
        header = ['k', 'w1', 'w0', 'wm1']
        for k, tom in toms.items():
            rows.extend((k,) + tuple(point)
                        for point in simplex_points(tom, alpha, beta))
    else:
        header = ['k', 'm', 'alpha', 'beta', 'omega']
        flat_alpha, flat_beta = alpha.reshape(-1), beta.reshape(-1)
        for k, tom in toms.items():
            if is_density(tom.source):
                values = tom.probabilities(alpha, beta)
            else:
                values = np.real(tom.values(alpha, beta))
            for idx, two_m in enumerate(magnetic_labels(tom.two_j)):
                omega = values[idx].reshape(-1)
                rows.extend((k, two_m / 2.0, flat_alpha[node],
                             flat_beta[node], omega[node])
                            for node in range(omega.size))
    utils.write_csv(output, header, rows)
    return 0


def _load_state(state, dim, seed):
    if state == 'random':
        return random_density(dim, np.random.default_rng(seed))
    return load_operator(state)


def cmd_inequality(family='entropic', theta=0.2366, phi=0.1698, n=5,
                   state=None, seed=0, bounds_only=False, tomographic=False,
                   output=None, **kwargs):
    ''' Evaluates one inequality family and prints its JSON report '''
    if family == 'ncycle' and bounds_only:
        bounds = ncycle_bounds(n)
        report = OrderedDict([('name', 'ncycle'), ('n', n)])
        report.update(bounds._asdict())
        emit_json(report, output)
        return 0

    if family == 'entropic' and tomographic:
        probs = tomographic_probabilities(theta, phi, grid_from_args(**kwargs))
        report = entropic_chain(scenario_joints(kcbs_scenario(theta, phi),
                                                probs))
    elif family == 'peres-mermin' and state is not None:
        report = peres_mermin(_load_state(state, 4, seed))
    elif family == 'pentagram' and state is not None:
        report = pentagram_value(pentagram_directions(),
                                 _load_state(state, 3, seed))
    elif family == 'ncycle' and state is not None:
        report = ncycle_value(ncycle_observables(n),
                              _load_state(state, 3, seed))
    else:
        report = create_inequality(family, theta=theta, phi=phi, n=n)
    emit_json(report.to_dict(), output)
    return 0


def _axis(bounds, default, resolution):
    low, high = default if bounds is None else bounds
    if low > high:
        raise ValueError('Invalid axis range: [{}, {}]'.format(low, high))
    return np.linspace(low, high, resolution)


def cmd_scan(family='unitary-tomogram', resolution=21, x_range=None,
             y_range=None, output=None, interactive=False, **kwargs):
    ''' Tabulates a two-parameter family on a uniform grid '''
    if resolution < 1:
        raise ValueError('Scan resolution must be >= 1, got: {}'.format(
            resolution))
    if family == 'unitary-tomogram':
        header = ['theta1', 'theta2', 'w1', 'w0', 'wm1']
        x_axis = _axis(x_range, (0.0, np.pi / 2), resolution)
        y_axis = _axis(y_range, (0.0, np.pi / 2), resolution)

        def row_func(x_val, y_val):
            params = U3Params((x_val, y_val, 0.0), (0.0,) * 6)
            return tuple(unitary_tomogram(params))
    elif family in ('entropic', 'kcbs'):
        header = ['theta', 'phi', 'value', 'violated']
        x_axis = _axis(x_range, (0.0, np.pi / 2), resolution)
        y_axis = _axis(y_range, (1e-3, np.pi / 4 - 1e-3), resolution)

        def row_func(x_val, y_val):
            report = create_inequality(family, theta=x_val, phi=y_val)
            return report.value, report.violated
    else:
        raise ValueError('Unknown scan family: {}'.format(family))

    rows = []
    for x_val, y_val in tqdm(list(itertools.product(x_axis, y_axis)),
                             desc='Scan', disable=not interactive):
        rows.append((x_val, y_val) + row_func(x_val, y_val))
    utils.write_csv(output, header, rows)
    return 0


def cmd_search(family='entropic', n=5, resolution=21, maxiters=200,
               tol=1e-12, xtol=1e-6, seed=0, n_restarts=0,
               optim_type='nelder-mead', output=None, interactive=False,
               **kwargs):
    ''' Maximizes a violation; JSON to stdout, the grid scan to --output '''
    objective, box = create_objective(family, n=n)
    cfg = SearchConfig(resolution, maxiters, tol, seed, n_restarts,
                       optim_type, xtol)
    result = maximize(objective, box, cfg, interactive=interactive)
    points, values = result.scan

    report = OrderedDict([
        ('family', family),
        ('argmax', result.argmax.tolist()),
        ('value', result.value),
        ('violated', bool(result.value > 1e-10)),
        ('grid_best', float(values.max())),
        ('history_length', len(result.history)),
    ])
    if output is not None:
        header = ['x{}'.format(idx) for idx in range(points.shape[1])]
        utils.write_csv(output, header + ['value'],
                        (tuple(point) + (value,)
                         for point, value in zip(points, values)))
    emit_json(report, None)
    return 0


def _max_abs(values):
    return float(np.max(np.abs(values)))


def check_state_tomograms(rng):
    alpha, beta = plot_grid(20, 20)
    error = 0.0
    for theta in rng.uniform(0.0, np.pi, 10):
        psi = [np.sin(theta), np.cos(theta), 0.0]
        values = tomogram_of(projector_from(psi), 2).values(alpha, beta)
        for idx, two_m in enumerate(magnetic_labels(2)):
            closed = state_tomogram_closed_form(theta, two_m, alpha, beta)
            error = max(error, _max_abs(values[idx] - closed))
    return CheckResult('state_tomogram_closed_form', error <= 1e-12,
                       error, 1e-12)


def check_dual_symbols(rng):
    alpha, beta = plot_grid(20, 20)
    error = 0.0
    for _ in range(10):
        vec = rng.standard_normal(3)
        vec /= np.linalg.norm(vec)
        values = dual_symbol(np.outer(vec, vec), 2).values(alpha, beta)
        for idx, two_m in enumerate(magnetic_labels(2)):
            closed = dual_symbol_closed_form(vec, two_m, alpha, beta)
            error = max(error, _max_abs(values[idx] - closed))
    return CheckResult('dual_symbol_closed_form', error <= 1e-10,
                       error, 1e-10)


def check_projector_closed_forms():
    alpha, beta = plot_grid(20, 20)
    error = 0.0
    for phi in (0.7, 0.1698):
        for k, tom in scenario_tomograms(0.0, phi).items():
            values = tom.values(alpha, beta)
            for idx, two_m in enumerate(magnetic_labels(2)):
                closed = projector_tomogram_closed_form(k, phi, two_m,
                                                        alpha, beta)
                error = max(error, _max_abs(values[idx] - closed))
    return CheckResult('projector_closed_forms', error <= 1e-10, error, 1e-10)


def check_reconstruction(rng, grid, full_gamma):
    error = 0.0
    for two_j, count in ((2, 3), (1, 2)):
        for _ in range(count):
            op = random_hermitian(two_j + 1, rng)
            rebuilt = reconstruct(tomogram_of(op, two_j), grid,
                                  collapse_gamma=not full_gamma)
            error = max(error, _max_abs(rebuilt - op))
    return CheckResult('reconstruction', error <= 1e-8, error, 1e-8)


def check_born_rule(rng, grid, full_gamma):
    error = 0.0
    for theta in rng.uniform(0.0, np.pi, 5):
        vec = rng.standard_normal(3)
        vec /= np.linalg.norm(vec)
        psi = [np.sin(theta), np.cos(theta), 0.0]
        value = pair(tomogram_of(projector_from(psi), 2),
                     dual_symbol(np.outer(vec, vec), 2), grid,
                     collapse_gamma=not full_gamma)
        expected = (vec[0] * np.sin(theta) + vec[1] * np.cos(theta)) ** 2
        error = max(error, abs(value - expected))
    return CheckResult('born_rule_pairing', error <= 1e-9, error, 1e-9)


def check_fidelity(grid, theta=0.2366, phi=0.1698):
    scenario = kcbs_scenario(theta, phi)
    direct = np.array([abs(np.vdot(vec, scenario.psi)) ** 2
                       for vec in scenario.a])
    error = _max_abs(tomographic_probabilities(theta, phi, grid) - direct)
    return CheckResult('fidelity_kernel', error <= 1e-9, error, 1e-9)


def check_peres_mermin(rng):
    error = max(abs(peres_mermin(random_density(4, rng)).value - 6.0)
                for _ in range(5))
    return CheckResult('peres_mermin', error <= 1e-12, error, 1e-12)


def check_ncycle_classical():
    error = max(abs(classical_ncycle_minimum(num) -
                    ncycle_bounds(num).classical) for num in range(4, 11))
    return CheckResult('ncycle_classical_bound', error == 0, float(error), 0.0)


def check_entropic():
    report = create_inequality('entropic')
    error = 0.0 if report.violated else abs(report.margin)
    return CheckResult('entropic_violation', report.violated, error, 0.0)


def check_unitary_tomograms(rng):
    error = 0.0
    for _ in range(100):
        theta = rng.uniform(0.0, np.pi / 2, 3)
        phases = rng.uniform(0.0, 2 * np.pi, 6)
        values = unitary_tomogram(U3Params(theta, phases))
        closed = np.array([
            np.cos(theta[0]) ** 2,
            np.cos(theta[1]) ** 2 * np.sin(theta[0]) ** 2,
            np.sin(theta[0]) ** 2 * np.sin(theta[1]) ** 2])
        error = max(error, _max_abs(values - closed))
    return CheckResult('unitary_tomogram', error <= 1e-14, error, 1e-14)


def cmd_verify(seed=0, full_gamma=False, output=None, **kwargs):
    ''' Runs the equivalence checks; exit code 1 when any of them fails '''
    grid = grid_from_args(**kwargs)
    rng = np.random.default_rng(seed)
    checks = [
        check_state_tomograms(rng),
        check_dual_symbols(rng),
        check_projector_closed_forms(),
        check_reconstruction(rng, grid, full_gamma),
        check_born_rule(rng, grid, full_gamma),
        check_fidelity(grid),
        check_peres_mermin(rng),
        check_ncycle_classical(),
        check_entropic(),
        check_unitary_tomograms(rng),
    ]
    for check in checks:
        if not check.passed:
            logger.warning('check %s failed: max error %.3e > %.1e',
                           check.name, check.max_error, check.tolerance)
    passed = all(check.passed for check in checks)
    summary = OrderedDict([
        ('grid', list(grid)),
        ('full_gamma', bool(full_gamma)),
        ('passed', passed),
        ('checks', [check._asdict() for check in checks]),
    ])
    emit_json(summary, output)
    return 0 if passed else 1


COMMANDS = {
    'tomogram': cmd_tomogram,
    'inequality': cmd_inequality,
    'scan': cmd_scan,
    'search': cmd_search,
    'verify': cmd_verify,
}


def main(**args):
    interactive = args.pop('interactive', False)
    logging.basicConfig(level=logging.INFO if interactive else logging.WARNING,
                        format=LOG_FORMAT)

    command = args.pop('command')
    output = args.get('output')
    if output is not None:
        output = osp.expandvars(output)
        args['output'] = output
        # Store the arguments next to the result
        conf_fn = osp.splitext(output)[0] + '_conf.yaml'
        utils.ensure_folder(conf_fn)
        with open(conf_fn, 'w') as conf_file:
            yaml.dump(dict(args, command=command), conf_file)

    start = time.time()
    try:
        status = COMMANDS[command](interactive=interactive, **args)
    except (ValueError, FloatingPointError, KeyError, OSError) as err:
        logger.error('%s failed: %s', command, err)
        return 2

    elapsed = time.time() - start
    time_msg = time.strftime('%H hours, %M minutes, %S seconds',
                             time.gmtime(elapsed))
    logger.info('Processing the %s command took: %s', command, time_msg)
    return status


if __name__ == "__main__":
    sys.exit(main(**parse_config()))
