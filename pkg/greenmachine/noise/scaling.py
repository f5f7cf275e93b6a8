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
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import partial

from tqdm import tqdm

from greenmachine.exceptions import DimensionError
from greenmachine.fock.fock import OccupationVector, fock_infidelity
from greenmachine.mesh.decompose import clements_decompose
from greenmachine.mesh.evaluate import mesh_to_unitary
from greenmachine.noise.inject import apply_noise, predict_infidelity
from greenmachine.noise.noise_model import NoiseKind, NoiseModel
from greenmachine.numerics.matrix import haar_random_unitary, random_state, state_infidelity, matrix_error
from greenmachine.numerics.stats import Quantiles
from greenmachine.utils import error_messages as ErrorMessages
from greenmachine.utils import constants, helper

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InfidelitySample:
    sample: int
    state_infidelity: float
    fock_infidelity: float
    matrix_error: float


@dataclass(frozen=True)
class ScalingPoint:
    """Summary of one (kind, n, sigma, n_photons) cell of the scaling sweep."""

    kind: NoiseKind
    n: int
    sigma: float
    n_photons: int
    samples: int
    state_infidelity: Quantiles
    fock_infidelity: Quantiles
    matrix_error: Quantiles
    prediction: float

    def to_row(self):
        row = {'kind': self.kind.value, 'n': self.n, 'sigma': self.sigma, 'n_photons': self.n_photons,
               'samples': self.samples, 'prediction': self.prediction}
        for name in ('state_infidelity', 'fock_infidelity', 'matrix_error'):
            for key, value in getattr(self, name).to_dict().items():
                row['{}_{}'.format(name, key)] = value
        return row


def sample_infidelity(model: NoiseModel, n, sample, n_photons=1):
    """
    One Monte Carlo sample: Haar target, Clements mesh, noisy rebuild,
    then the three error metrics against the ideal mesh.
    """
    if n_photons > n:
        raise DimensionError(ErrorMessages.PATTERN_LENGTH, 'more photons than modes')
    seed = model.seed
    target = haar_random_unitary(n, helper.rng_stream(seed, constants.STREAM_HAAR, sample))
    mesh = clements_decompose(target)
    ideal = mesh_to_unitary(mesh)
    actual = apply_noise(mesh, model, sample)
    psi = random_state(n, helper.rng_stream(seed, constants.STREAM_STATE, sample))
    modes = helper.rng_stream(seed, constants.STREAM_MODES, sample).choice(n, size=n_photons, replace=False)
    result = InfidelitySample(sample=sample,
                              state_infidelity=state_infidelity(ideal, actual, psi),
                              fock_infidelity=fock_infidelity(ideal, actual, OccupationVector.from_modes(n, modes)),
                              matrix_error=matrix_error(ideal, actual))
    logger.debug('sample %d: %s', sample, result)
    return result


def infidelity_samples(model: NoiseModel, n, samples, n_photons=1, threads=1, progress=False):
    """
    Independent samples in sample order; each sample owns its streams,
    so the result does not depend on `threads`.
    """
    run = partial(sample_infidelity, model, n, n_photons=n_photons)
    desc = '{} n={} sigma={}'.format(model.kind.value, n, model.sigma)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(tqdm(pool.map(run, range(samples)), total=samples, desc=desc, disable=not progress))
    return [run(s) for s in tqdm(range(samples), desc=desc, disable=not progress)]


def scaling_point(model: NoiseModel, n, samples, n_photons=1, threads=1, progress=False):
    results = infidelity_samples(model, n, samples, n_photons, threads, progress)
    prediction = float('nan')
    if model.kind != NoiseKind.hybrid:
        prediction = predict_infidelity(model.kind, n, model.sigma, n_photons)
    point = ScalingPoint(kind=model.kind, n=n, sigma=model.sigma, n_photons=n_photons, samples=samples,
                         state_infidelity=Quantiles.of([r.state_infidelity for r in results]),
                         fock_infidelity=Quantiles.of([r.fock_infidelity for r in results]),
                         matrix_error=Quantiles.of([r.matrix_error for r in results]),
                         prediction=prediction)
    logger.info('%s n=%d sigma=%g photons=%d: median matrix error %.3e, prediction %.3e',
                model.kind.value, n, model.sigma, n_photons, point.matrix_error.median, prediction)
    return point
