# (C) Copyright Artificial Brain 2021.
#
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.


import argparse
import json
import logging
import sys

from greenmachine.cli.config import resolve_config
from greenmachine.cli.runner import run, verify
from greenmachine.exceptions import ConfigError, GreenMachineError

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'
LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR')
GLOBAL_FLAGS = {'seed': 'seed', 'format': 'format', 'out': 'output_path', 'threads': 'threads',
                'progress': 'progress'}
NOISE_KINDS = ('correlated', 'uncorrelated', 'hybrid')


def _global_parser():
    parser = argparse.ArgumentParser(add_help=False)
    group = parser.add_argument_group('run options')
    group.add_argument('--seed', type=int, help='master seed; drawn and recorded in the manifest when omitted')
    group.add_argument('--format', choices=('csv', 'json'), help='data file format (default csv)')
    group.add_argument('--out', help='output directory (default results)')
    group.add_argument('--threads', type=int, help='worker threads for sample loops (default 1)')
    group.add_argument('--config', help='JSON experiment config; explicit flags override its fields')
    group.add_argument('--log-level', choices=LOG_LEVELS, default='WARNING')
    group.add_argument('--progress', action='store_true', default=None, help='show progress bars')
    return parser


def build_parser():
    common = _global_parser()
    parser = argparse.ArgumentParser(prog='greenmachine',
                                     description='Time-bin Green Machine compiler, simulator and benchmarks.')
    commands = parser.add_subparsers(dest='command', required=True)

    p = commands.add_parser('compile', parents=[common], help='compile a target unitary into a schedule')
    p.add_argument('--target', help='matrix JSON file')
    p.add_argument('--topology', help='clements, scf, scf-minimal or pruned-<depth>')
    p.add_argument('--hw', help='hardware config JSON')
    p.add_argument('--restarts', type=int, help='random starts when fitting non-Clements meshes')

    p = commands.add_parser('simulate', parents=[common], help='run a schedule on simulated hardware')
    p.add_argument('--schedule', help='schedule JSON file')
    p.add_argument('--hw', help='hardware config JSON')
    p.add_argument('--sigma', type=float)
    p.add_argument('--noise', choices=NOISE_KINDS)
    p.add_argument('--instance', type=int)

    p = commands.add_parser('verify', parents=[common], help='check a schedule against its mesh')
    p.add_argument('--schedule', required=True)
    p.add_argument('--mesh', required=True)
    p.add_argument('--hw')
    p.add_argument('--tol', type=float, default=1e-9)

    p = commands.add_parser('scaling', parents=[common], help='infidelity versus size and error strength')
    p.add_argument('--n', type=int, nargs='+')
    p.add_argument('--sigma', type=float, nargs='+')
    p.add_argument('--kind', choices=NOISE_KINDS, nargs='+')
    p.add_argument('--photons', type=int, nargs='+')
    p.add_argument('--samples', type=int)
    p.add_argument('--sigma-jitter', type=float)

    p = commands.add_parser('bsm', parents=[common], help='boosted Bell-state measurement benchmark')
    p.add_argument('--depth', type=int)
    p.add_argument('--sigma', type=float)
    p.add_argument('--threshold', type=float)
    p.add_argument('--samples', type=int)
    p.add_argument('--architecture', choices=('ggm', 'clements'))
    p.add_argument('--sweep', choices=('threshold', 'depth'))
    p.add_argument('--thresholds', type=float, nargs='+')
    p.add_argument('--depths', type=int, nargs='+')

    p = commands.add_parser('transport', parents=[common], help='stage-resolved photon transport')
    p.add_argument('--topology')
    p.add_argument('--n', type=int)
    p.add_argument('--stages', type=int)
    p.add_argument('--input', type=int, nargs='+', help='occupation pattern, one count per mode')
    p.add_argument('--sigma', type=float)
    p.add_argument('--noise', choices=NOISE_KINDS)
    p.add_argument('--circuits', type=int)

    p = commands.add_parser('cost', parents=[common], help='architecture cost table and MAC rates')
    p.add_argument('--architectures', nargs='+')
    p.add_argument('--n', type=int, nargs='+')
    p.add_argument('--hw')
    p.add_argument('--taus', type=float, nargs='+')
    p.add_argument('--multiplex', type=int)
    return parser


def _split_args(args):
    """Global overrides and experiment parameters, both keeping None for flags not given."""
    skip = {'command', 'config', 'log_level'} | set(GLOBAL_FLAGS)
    overrides = {GLOBAL_FLAGS[k]: getattr(args, k) for k in GLOBAL_FLAGS}
    parameters = {k: v for k, v in vars(args).items() if k not in skip}
    return overrides, parameters


def _verify(args):
    report = verify(args.schedule, args.mesh, args.hw, args.tol)
    print(json.dumps(report.to_dict(), sort_keys=True))
    return 0 if report.passed else 1


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=getattr(logging, args.log_level), format=LOG_FORMAT)
    try:
        if args.command == 'verify':
            return _verify(args)
        overrides, parameters = _split_args(args)
        config = resolve_config(args.command, overrides, parameters, args.config)
        result = run(config)
        print(result.manifest)
        return 0
    except ConfigError as err:
        print('greenmachine: {}'.format(err.message), file=sys.stderr)
        return 2
    except GreenMachineError as err:
        print('greenmachine: {}'.format(err.message), file=sys.stderr)
        return 1


if __name__ == '__main__':
    sys.exit(main())
