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


import logging
import platform
import time
from dataclasses import dataclass
from pathlib import Path
from typing import List

import numpy as np
import pydantic
import scipy

import greenmachine
from greenmachine.bsm import benchmark, depth_sweep, threshold_sweep
from greenmachine.cli.config import BsmSweep, Experiment, ExperimentConfig, OutputFormat
from greenmachine.cost import architecture_cost, mac_rate_sweep
from greenmachine.hwsim import HardwareConfig, loss_budget, simulate
from greenmachine.mesh import build_topology, clements_decompose, fit_mesh, load_mesh, mesh_to_unitary, save_mesh
from greenmachine.noise import NoiseModel, scaling_point
from greenmachine.numerics import distance_up_to_global_phase, load_matrix, save_matrix
from greenmachine.scheduler import compile_schedule, load_schedule, save_schedule, schedule_stats
from greenmachine.transport import run_transport
from greenmachine.utils import constants, files

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunResult:
    config: ExperimentConfig
    paths: List[Path]
    manifest: Path
    wall_time: float


@dataclass(frozen=True)
class VerifyReport:
    n_modes: int
    distance: float
    tol: float

    @property
    def passed(self):
        return self.distance < self.tol

    def to_dict(self):
        return {'n_modes': self.n_modes, 'distance': self.distance, 'tol': self.tol, 'passed': self.passed}


def _columns(rows):
    """Union of row keys in first-seen order."""
    names = {}
    for row in rows:
        names.update(dict.fromkeys(row))
    return list(names)


def _emit(out, name, rows, fmt):
    if fmt == OutputFormat.json:
        return files.write_json(out / '{}.json'.format(name), rows)
    return files.write_csv(out / '{}.csv'.format(name), rows, _columns(rows))


def _read_hardware(path, delays):
    """Hardware from a file, or lossless hardware carrying exactly the needed delays."""
    if path is not None:
        return files.read_model(HardwareConfig, path)
    return HardwareConfig(delay_set=sorted(set(delays)) or [1])


def _noise(kind, sigma, seed, sigma_jitter=0.0):
    if sigma == 0 and sigma_jitter == 0:
        return None
    return NoiseModel(kind, sigma, sigma_jitter, seed=seed)


def _compile(config, p, out):
    target = load_matrix(p.target)
    n = target.shape[0]
    if p.topology == 'clements':
        mesh, fit_cost = clements_decompose(target), 0.0
    else:
        fit = fit_mesh(target, build_topology(p.topology, n), restarts=p.restarts, seed=config.seed)
        if not fit.converged:
            logger.warning('%s fit did not converge after %d restarts, cost %.3e', p.topology, fit.restarts, fit.cost)
        mesh, fit_cost = fit.mesh, fit.cost
    hw = _read_hardware(p.hw, [d for ds in mesh.layer_distances() for d in ds])
    schedule = compile_schedule(mesh, hw)
    stats = schedule_stats(schedule, hw)
    row = {'n': n, 'topology': p.topology, 'layers': mesh.n_layers, 'couplings': mesh.n_couplings,
           'rounds': schedule.n_rounds, 'delays': ' '.join(str(d) for d in sorted(set(schedule.delay_lengths()))),
           'total_time': stats.total_time, 'mzi_passes': stats.mzi_passes,
           'loss_db': loss_budget(schedule, hw).total_db, 'fit_cost': fit_cost,
           'distance': distance_up_to_global_phase(mesh_to_unitary(mesh), target)}
    return [save_mesh(out / 'mesh.json', mesh), save_schedule(out / 'schedule.json', schedule),
            _emit(out, 'compile', [row], config.format)]


def _simulate(config, p, out):
    schedule = load_schedule(p.schedule)
    hw = _read_hardware(p.hw, schedule.delay_lengths())
    u = simulate(schedule, hw, _noise(p.noise, p.sigma, config.seed), instance=p.instance)
    stats = schedule_stats(schedule, hw)
    row = {'n': schedule.n_modes, 'rounds': schedule.n_rounds, 'sigma': p.sigma, 'instance': p.instance,
           'total_time': stats.total_time, 'loss_db': loss_budget(schedule, hw).total_db,
           'transmission': float(np.sum(np.abs(u) ** 2) / schedule.n_modes)}
    return [save_matrix(out / 'unitary.json', u), _emit(out, 'simulate', [row], config.format)]


def _scaling(config, p, out):
    rows = []
    for kind in p.kind:
        for n in p.n:
            for sigma in p.sigma:
                for photons in p.photons:
                    model = NoiseModel(kind, sigma, p.sigma_jitter, seed=config.seed)
                    point = scaling_point(model, n, p.samples, photons, config.threads, config.progress)
                    rows.append(point.to_row())
    return [_emit(out, 'scaling', rows, config.format)]


def _bsm(config, p, out):
    common = dict(sigma=p.sigma, n_samples=p.samples, seed=config.seed, threads=config.threads,
                  progress=config.progress)
    if p.sweep == BsmSweep.threshold:
        results = threshold_sweep(p.depth, thresholds=p.thresholds, architecture=p.architecture, **common)
    elif p.sweep == BsmSweep.depth:
        results = depth_sweep(p.depths, threshold=p.threshold, **common)
    else:
        results = [benchmark(p.depth, threshold=p.threshold, architecture=p.architecture, **common)]
    rows = [row for r in results for row in r.to_rows()]
    summary = [r.to_summary() for r in results]
    return [_emit(out, 'bsm', rows, config.format),
            files.write_json(out / 'bsm_summary.json', summary if p.sweep else summary[0])]


def _transport(config, p, out):
    record = run_transport(p.topology, p.n, p.stages, p.input, _noise(p.noise, p.sigma, config.seed),
                           p.circuits, config.threads, config.progress)
    if config.format == OutputFormat.csv:
        return record.write_heatmaps(out, 'transport')
    signature = record.localization_signature()
    data = {'topology': record.topology, 'n_modes': record.n_modes, 'input': list(record.input_pattern),
            'sigma': record.sigma, 'circuits': record.n_circuits,
            'occupation': record.heatmap_rows(record.occupation), 'stages': record.stage_rows(),
            'localization_signature': None if signature is None else list(signature)}
    if record.coincidence is not None:
        data['coincidence'] = record.heatmap_rows(record.coincidence)
    return [files.write_json(out / 'transport.json', data)]


def _cost_row(report):
    row = report.to_dict()
    for key, value in row.pop('loss_breakdown').items():
        row['loss_{}'.format(key)] = value
    return row


def _cost(config, p, out):
    hw = files.read_model(HardwareConfig, p.hw) if p.hw is not None else HardwareConfig()
    rows = [_cost_row(architecture_cost(arch, n, hw)) for arch in p.architectures for n in p.n]
    return [_emit(out, 'cost', rows, config.format),
            _emit(out, 'mac_rate', mac_rate_sweep(p.taus, p.n[0], p.multiplex), config.format)]


PIPELINES = {
    Experiment.compile: _compile,
    Experiment.simulate: _simulate,
    Experiment.scaling: _scaling,
    Experiment.bsm: _bsm,
    Experiment.transport: _transport,
    Experiment.cost: _cost,
}


def versions():
    return {'greenmachine': greenmachine.__version__, 'python': platform.python_version(),
            'numpy': np.__version__, 'scipy': scipy.__version__, 'pydantic': pydantic.VERSION}


def run(config: ExperimentConfig):
    """
    Run one experiment and write its data files plus manifest.json into
    config.output_path. Data files depend only on (config, seed).
    """
    if config.seed is None:
        config = config.model_copy(update={'seed': int(np.random.SeedSequence().entropy % 2 ** 63)})
    out = Path(config.output_path)
    logger.info('running %s into %s with seed %d', config.experiment.value, out, config.seed)
    start = time.perf_counter()
    paths = PIPELINES[config.experiment](config, config.typed_parameters(), out)
    wall_time = time.perf_counter() - start
    manifest = files.write_json(out / constants.MANIFEST_NAME, {
        'config': config.model_dump(mode='json'),
        'seed': config.seed,
        'versions': versions(),
        'wall_time': wall_time,
        'files': [Path(path).name for path in paths],
    })
    logger.info('%s finished in %.2f s, %d files', config.experiment.value, wall_time, len(paths))
    return RunResult(config=config, paths=[Path(path) for path in paths], manifest=manifest, wall_time=wall_time)


def verify(schedule_path, mesh_path, hw_path=None, tol=1e-9):
    """
    Simulate a compiled schedule and compare it with the abstract mesh up
    to a global phase.
    :raises ConfigError: a file fails to parse
    :raises DimensionError: schedule and mesh disagree on the number of modes
    """
    schedule = load_schedule(schedule_path)
    mesh = load_mesh(mesh_path)
    hw = _read_hardware(hw_path, schedule.delay_lengths())
    distance = distance_up_to_global_phase(simulate(schedule, hw), mesh_to_unitary(mesh))
    report = VerifyReport(n_modes=schedule.n_modes, distance=distance, tol=tol)
    logger.info('verify %s against %s: distance %.3e, %s', schedule_path, mesh_path, distance,
                'pass' if report.passed else 'fail')
    return report
