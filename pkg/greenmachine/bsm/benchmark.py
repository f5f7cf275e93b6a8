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
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import List, Tuple

from tqdm import tqdm

from greenmachine.bsm.circuit import build_bsm_circuit
from greenmachine.bsm.decode import PosteriorTable, detection_distributions
from greenmachine.exceptions import InfeasibleError, InvalidArchitectureError, InvalidInputError
from greenmachine.mesh.decompose import clements_decompose
from greenmachine.noise.inject import apply_noise
from greenmachine.noise.noise_model import NoiseKind, NoiseModel
from greenmachine.numerics.stats import Quantiles
from greenmachine.utils import error_messages as ErrorMessages
from greenmachine.utils import constants

logger = logging.getLogger(__name__)

GGM = 'ggm'
CLEMENTS = 'clements'
ARCHITECTURES = (GGM, CLEMENTS)


@dataclass(frozen=True)
class BsmSample:
    sample: int
    success: float
    error: float


@dataclass(frozen=True)
class BsmResult:
    """Per-sample decoder figures for one (architecture, depth, sigma, threshold) cell."""

    architecture: str
    depth: int
    sigma: float
    threshold: float
    samples: Tuple[BsmSample, ...]
    success: Quantiles
    error: Quantiles

    @property
    def success_rate(self):
        return self.success.mean

    @property
    def error_given_heralded(self):
        return self.error.mean

    def to_rows(self):
        return [{'sample_id': s.sample, 'sigma': self.sigma, 'depth': self.depth, 'threshold': self.threshold,
                 'success': s.success, 'error': s.error} for s in self.samples]

    def to_summary(self):
        return {'architecture': self.architecture, 'depth': self.depth, 'sigma': self.sigma,
                'threshold': self.threshold, 'samples': len(self.samples),
                'success': self.success.to_dict(), 'error': self.error.to_dict()}


def _error_quantiles(values):
    finite = [v for v in values if math.isfinite(v)]
    if not finite:
        return Quantiles(*([float('nan')] * 6))
    return Quantiles.of(finite)


def _result(architecture, depth, sigma, threshold, samples):
    samples = tuple(samples)
    return BsmResult(architecture=architecture, depth=depth, sigma=sigma, threshold=threshold, samples=samples,
                     success=Quantiles.of([s.success for s in samples]),
                     error=_error_quantiles([s.error for s in samples]))


class _Sampler:
    """
    Noisy realizations of the boosted measurement. The gGM architecture
    reuses one physical MZI, so its errors are correlated; the Clements
    comparison runs the ideal 8-mode unitary on a spatial mesh with
    independent errors.
    """

    def __init__(self, architecture, depth, sigma, seed):
        if architecture not in ARCHITECTURES:
            raise InvalidArchitectureError(ErrorMessages.UNKNOWN_ARCHITECTURE, str(architecture))
        self.circuit = build_bsm_circuit(depth)
        if architecture == GGM:
            self.mesh = self.circuit.program
            self.model = NoiseModel(NoiseKind.correlated, sigma, seed=seed)
        else:
            self.mesh = clements_decompose(self.circuit.unitary())
            self.model = NoiseModel(NoiseKind.uncorrelated, sigma, seed=seed)

    def table(self, sample):
        u = apply_noise(self.mesh, self.model, sample)
        return PosteriorTable(detection_distributions(self.circuit, u))


def _sample_tables(sampler, thresholds, sample):
    table = sampler.table(sample)
    return [table.decide(t) for t in thresholds]


def _run(architecture, depth, sigma, thresholds, n_samples, seed, threads, progress):
    if n_samples < 1:
        raise InvalidInputError(ErrorMessages.TOO_FEW_SAMPLES, str(n_samples))
    sampler = _Sampler(architecture, depth, sigma, seed)
    run = partial(_sample_tables, sampler, thresholds)
    desc = 'bsm {} depth={} sigma={}'.format(architecture, depth, sigma)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            decoded = list(tqdm(pool.map(run, range(n_samples)), total=n_samples, desc=desc, disable=not progress))
    else:
        decoded = [run(s) for s in tqdm(range(n_samples), desc=desc, disable=not progress)]
    results = []
    for k, threshold in enumerate(thresholds):
        samples = [BsmSample(s, d[k].success_rate, d[k].error_given_heralded) for s, d in enumerate(decoded)]
        results.append(_result(architecture, depth, sigma, float(threshold), samples))
    return results


def benchmark(depth=constants.MIN_PRUNED_DEPTH, sigma=0.0, threshold=constants.DEFAULT_DECISION_THRESHOLD,
              n_samples=1000, seed=None, architecture=GGM, threads=1, progress=False):
    """
    Success and error-given-heralded statistics over noisy circuit samples.
    :param architecture: 'ggm' for the pruned Green Machine with correlated
        errors, 'clements' for the spatial mesh with uncorrelated errors
    """
    result = _run(architecture, depth, sigma, [threshold], n_samples, seed, threads, progress)[0]
    logger.info('bsm %s depth=%d sigma=%g: mean success %.4f, median %.4f',
                architecture, depth, sigma, result.success_rate, result.success.median)
    if result.success_rate < constants.PERCOLATION_THRESHOLD:
        logger.info('mean success is below the percolation threshold %.3f', constants.PERCOLATION_THRESHOLD)
    return result


def threshold_grid():
    count = int(round((constants.THRESHOLD_SWEEP_STOP - constants.THRESHOLD_SWEEP_START)
                      / constants.THRESHOLD_SWEEP_STEP)) + 1
    return [round(constants.THRESHOLD_SWEEP_START + k * constants.THRESHOLD_SWEEP_STEP, 10) for k in range(count)]


def threshold_sweep(depth=constants.MIN_PRUNED_DEPTH, sigma=0.0, n_samples=1000, seed=None, thresholds=None,
                    architecture=GGM, threads=1, progress=False) -> List[BsmResult]:
    """Every threshold is decided on the same noisy samples."""
    thresholds = threshold_grid() if thresholds is None else list(thresholds)
    return _run(architecture, depth, sigma, thresholds, n_samples, seed, threads, progress)


def depth_sweep(depths=None, sigma=0.0, threshold=constants.DEFAULT_DECISION_THRESHOLD, n_samples=1000, seed=None,
                threads=1, progress=False) -> List[BsmResult]:
    depths = range(constants.MIN_PRUNED_DEPTH, constants.MAX_PRUNED_DEPTH + 1) if depths is None else depths
    return [benchmark(d, sigma, threshold, n_samples, seed, GGM, threads, progress) for d in depths]


def lossy_success_rate(eta, success=constants.BOOSTED_BSM_SUCCESS):
    """Heralded success when each of the six photons survives with probability eta."""
    return success * float(eta) ** constants.BSM_PHOTONS


def loss_threshold(target_success):
    """Smallest uniform transmission that keeps the boosted success at `target_success`."""
    if target_success <= 0:
        raise InvalidInputError(ErrorMessages.TARGET_NOT_POSITIVE, str(target_success))
    if target_success > constants.BOOSTED_BSM_SUCCESS:
        raise InfeasibleError(ErrorMessages.TARGET_TOO_HIGH, str(target_success))
    return float((target_success / constants.BOOSTED_BSM_SUCCESS) ** (1.0 / constants.BSM_PHOTONS))
