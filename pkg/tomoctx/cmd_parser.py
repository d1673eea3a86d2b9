# -*- coding: utf-8 -*-

from __future__ import absolute_import
from __future__ import print_function
from __future__ import division

import configargparse

COMMANDS = ['tomogram', 'inequality', 'scan', 'search', 'verify']

DEFAULT_FAMILY = {
    'inequality': 'entropic',
    'scan': 'unitary-tomogram',
    'search': 'entropic',
}


def parse_config(argv=None):
    arg_formatter = configargparse.ArgumentDefaultsHelpFormatter

    cfg_parser = configargparse.YAMLConfigFileParser
    description = 'Spin tomograms and contextuality inequalities'
    parser = configargparse.ArgParser(formatter_class=arg_formatter,
                                      config_file_parser_class=cfg_parser,
                                      description=description,
                                      prog='tomoctx')

    parser.add_argument('command', choices=COMMANDS,
                        help='The command to run')
    parser.add_argument('family_pos', nargs='?', default=None,
                        metavar='family',
                        help='Inequality, scan or search family')
    parser.add_argument('-c', '--config',
                        required=False, is_config_file=True,
                        help='config file path')
    parser.add_argument('--family', type=str, default=None,
                        help='Same as the positional family; the positional'
                        ' one wins')
    parser.add_argument('--interactive',
                        type=lambda arg: arg.lower() == 'true',
                        default=False,
                        help='Print info messages and progress bars')
    parser.add_argument('--scenario', type=str, default='kcbs',
                        choices=['kcbs', 'peres-mermin'],
                        help='The named scenario')
    parser.add_argument('--theta', type=float, default=0.2366,
                        help='Angle of the scenario state')
    parser.add_argument('--phi', type=float, default=0.1698,
                        help='Angle of the scenario vectors, in (0, pi/4)')
    parser.add_argument('--n', type=int, default=5,
                        help='Number of observables of the n-cycle')
    parser.add_argument('--j', type=float, default=1.0,
                        help='The spin j, integer or half-integer')
    parser.add_argument('--grid-alpha', type=int, default=64,
                        help='Number of alpha nodes')
    parser.add_argument('--grid-beta', type=int, default=32,
                        help='Number of beta nodes')
    parser.add_argument('--grid-gamma', type=int, default=64,
                        help='Number of gamma nodes')
    parser.add_argument('--grid', type=int, nargs=3, default=None,
                        metavar=('NA', 'NB', 'NG'),
                        help='Set all three node counts at once')
    parser.add_argument('--full-gamma', action='store_true',
                        help='Integrate gamma numerically instead of the'
                        ' analytic 2 pi factor')
    parser.add_argument('--simplex', action='store_true',
                        help='Export tomograms as simplex points')
    parser.add_argument('--tomographic', action='store_true',
                        help='Compute the entropic probabilities from'
                        ' tomograms instead of inner products')
    parser.add_argument('--bounds-only', action='store_true',
                        help='Only report the n-cycle bounds')
    parser.add_argument('--operator', type=str, default=None,
                        help='Operator or state JSON file')
    parser.add_argument('--state', type=str, default=None,
                        help='State JSON file or "random"')
    parser.add_argument('--seed', type=int, default=0,
                        env_var='TOMOCTX_SEED',
                        help='Seed of every random draw')
    parser.add_argument('--output', type=str, default=None,
                        help='Output file; stdout when missing')
    parser.add_argument('--resolution', type=int, default=21,
                        help='Points per axis of scans and search grids')
    parser.add_argument('--x-range', type=float, nargs=2, default=None,
                        help='Range of the first scan axis')
    parser.add_argument('--y-range', type=float, nargs=2, default=None,
                        help='Range of the second scan axis')
    parser.add_argument('--optim_type', type=str, default='nelder-mead',
                        choices=['nelder-mead'],
                        help='The optimizer used for refinement')
    parser.add_argument('--maxiters', type=int, default=200,
                        help='The maximum refinement iterations')
    parser.add_argument('--tol', type=float, default=1e-12,
                        help='Relative spread of the simplex values at'
                        ' which the refinement stops')
    parser.add_argument('--xtol', type=float, default=1e-6,
                        help='Vertex spread, in grid steps, below which the'
                        ' refinement simplex counts as settled')
    parser.add_argument('--n-restarts', type=int, default=0,
                        help='Extra refinements from seeded random starts')

    args = parser.parse_args(argv)

    args_dict = vars(args)
    args_dict.pop('config', None)

    family_pos = args_dict.pop('family_pos')
    if family_pos is not None:
        args_dict['family'] = family_pos
    if args_dict['family'] is None:
        args_dict['family'] = DEFAULT_FAMILY.get(args_dict['command'])

    two_j = 2 * args_dict.pop('j')
    if two_j < 0 or abs(two_j - round(two_j)) > 1e-12:
        parser.error('--j must be a nonnegative multiple of 1/2, got: '
                     '{}'.format(two_j / 2))
    args_dict['two_j'] = int(round(two_j))

    grid = args_dict.pop('grid')
    if grid is not None:
        args_dict['grid_alpha'], args_dict['grid_beta'], \
            args_dict['grid_gamma'] = grid
    return args_dict
