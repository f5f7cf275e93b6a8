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


import numpy as np

from greenmachine.exceptions import DimensionError, InvalidInputError
from greenmachine.mesh.evaluate import blocks_to_unitary
from greenmachine.mesh.mesh_program import MeshProgram
from greenmachine.mzi.transfer import lossy_blocks
from greenmachine.noise.noise_model import NoiseKind, NoiseModel
from greenmachine.utils import error_messages as ErrorMessages
from greenmachine.utils import constants, helper


def draw_errors(model: NoiseModel, n_couplings, instance=0):
    """
    Per-coupling splitter errors for one circuit instance.
    The same (seed, instance) gives the same draws for every kind, so the
    correlated pair is the first uncorrelated pair.
    :return: (alpha, beta), each of length n_couplings
    """
    rng = helper.rng_stream(model.seed, constants.STREAM_NOISE, instance)
    z = rng.standard_normal((max(n_couplings, 1), 2))
    if model.kind == NoiseKind.uncorrelated:
        errors = model.sigma * z[:n_couplings]
    else:
        errors = np.repeat(model.sigma * z[:1], n_couplings, axis=0)
        if model.kind == NoiseKind.hybrid:
            jitter = helper.rng_stream(model.seed, constants.STREAM_JITTER, instance)
            errors = errors + model.sigma_jitter * jitter.standard_normal((n_couplings, 2))
    return errors[:, 0], errors[:, 1]


def noisy_blocks(m: MeshProgram, model: NoiseModel, instance=0):
    alpha, beta = draw_errors(model, m.n_couplings, instance)
    return lossy_blocks(m.thetas, m.phis, alpha, beta)


def apply_noise(m: MeshProgram, model: NoiseModel, instance=0):
    """Transfer matrix of the mesh built from MZIs with drawn splitter errors."""
    return blocks_to_unitary(m, noisy_blocks(m, model, instance))


def predict_infidelity(kind, n, sigma, n_photons=1):
    """
    First-order mean error: N_ph N sigma^2 / 2 for independent errors,
    smaller by sqrt(2) when one static error is shared by every coupling.
    """
    kind = NoiseKind(kind)
    if n < 2:
        raise DimensionError(ErrorMessages.TOO_FEW_MODES)
    if n_photons < 1:
        raise InvalidInputError(ErrorMessages.NEGATIVE_COUNT, 'n_photons must be at least 1')
    uncorrelated = n_photons * n * sigma ** 2 / 2.0
    if kind == NoiseKind.uncorrelated:
        return uncorrelated
    if kind == NoiseKind.correlated:
        return uncorrelated / constants.SQRT2
    raise InvalidInputError(ErrorMessages.UNKNOWN_NOISE_PREDICTION, kind.value,
                            '(hardware-corrected meshes scale as {})'.format(constants.CORRECTED_ERROR_SCALING))
