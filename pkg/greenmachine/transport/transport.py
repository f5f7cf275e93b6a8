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
from pathlib import Path
from typing import Optional, Tuple

import numpy as np
from tqdm import tqdm

from greenmachine.exceptions import InvalidDistributionError, InvalidInputError, InvalidPatternError, \
    SizeLimitError
from greenmachine.fock.fock import OccupationVector, as_occupation
from greenmachine.mesh.evaluate import propagate
from greenmachine.mesh.mesh_program import MeshProgram
from greenmachine.mesh.topology import build_topology
from greenmachine.mzi.transfer import ideal_blocks, lossy_blocks
from greenmachine.noise.inject import draw_errors
from greenmachine.noise.noise_model import NoiseModel
from greenmachine.utils import error_messages as ErrorMessages
from greenmachine.utils import constants, files

logger = logging.getLogger(__name__)

DIFFUSED_FRACTION = 0.95
LOCALIZED_IPR = 2.1


def ipr(probabilities):
    """Participation ratio 1 / sum p_i^2: N for uniform spreading, 1 for a point mass."""
    p = np.asarray(probabilities, dtype=float)
    if np.any(p < -1e-12) or abs(p.sum() - 1.0) > constants.NORMALIZATION_TOL:
        raise InvalidDistributionError(ErrorMessages.NOT_A_DISTRIBUTION, 'sum {:.6g}'.format(p.sum()))
    return float(1.0 / np.sum(p ** 2))


@dataclass(frozen=True)
class TransportRecord:
    """
    Stage-resolved transport averages. `occupation[s, i]` is the mean
    photon number of mode i after stage s + 1 divided by the photon
    number; `coincidence[s, i]` is P(n_i = 2) for two-photon inputs.
    """

    topology: str
    n_modes: int
    input_pattern: Tuple[int, ...]
    sigma: float
    n_circuits: int
    occupation: np.ndarray
    coincidence: Optional[np.ndarray]
    ipr_per_stage: Tuple[float, ...]
    bunching_per_stage: Tuple[float, ...]

    @property
    def stages(self):
        return self.occupation.shape[0]

    @property
    def single_photon_heatmap(self):
        return self.occupation

    @property
    def coincidence_heatmap(self):
        return self.coincidence

    def localization_signature(self, diffused=DIFFUSED_FRACTION, localized=LOCALIZED_IPR):
        """
        (first fully diffused stage, first later localized stage), 1-based,
        or None when the run never re-localizes after diffusing.
        """
        ipr_values = np.asarray(self.ipr_per_stage)
        spread = np.flatnonzero(ipr_values >= diffused * self.n_modes)
        if spread.size == 0:
            return None
        later = np.flatnonzero(ipr_values[spread[0]:] <= localized)
        if later.size == 0:
            return None
        return int(spread[0]) + 1, int(spread[0] + later[0]) + 1

    def heatmap_rows(self, heatmap):
        return [dict({'stage': s + 1}, **{'mode_{}'.format(i): float(v) for i, v in enumerate(row)})
                for s, row in enumerate(heatmap)]

    def stage_rows(self):
        rows = []
        for s in range(self.stages):
            row = {'stage': s + 1, 'ipr': self.ipr_per_stage[s]}
            if self.bunching_per_stage:
                row['bunching'] = self.bunching_per_stage[s]
            rows.append(row)
        return rows

    def write_heatmaps(self, directory, prefix='transport'):
        """One CSV per observable: rows are stages, columns are modes."""
        directory = Path(directory)
        paths = [files.write_csv(directory / '{}_occupation.csv'.format(prefix), self.heatmap_rows(self.occupation)),
                 files.write_csv(directory / '{}_stages.csv'.format(prefix), self.stage_rows())]
        if self.coincidence is not None:
            paths.append(files.write_csv(directory / '{}_coincidence.csv'.format(prefix),
                                         self.heatmap_rows(self.coincidence)))
        return paths


def transport_mesh(topology, n_modes, stages=None):
    """
    All-50:50 program of the named topology. More stages than the topology
    has layers loop around its layer sequence again.
    """
    base = build_topology(topology, n_modes)
    stages = base.n_layers if stages is None else int(stages)
    if stages < 1:
        raise InvalidInputError(ErrorMessages.TOO_FEW_STAGES, str(stages))
    layers = tuple(base.layers[k % base.n_layers] for k in range(stages))
    mesh = MeshProgram(n_modes, layers, topology=base.topology, depth=base.depth)
    return mesh.with_parameters(np.full(mesh.n_couplings, math.pi / 2), np.zeros(mesh.n_couplings))


def _check_input(inp: OccupationVector, n_modes):
    if inp.n_modes != n_modes:
        raise InvalidPatternError(ErrorMessages.PATTERN_LENGTH, str(inp.counts))
    if inp.n_photons > constants.MAX_TRANSPORT_PHOTONS:
        raise SizeLimitError(ErrorMessages.TOO_MANY_TRANSPORT_PHOTONS, 'got {}'.format(inp.n_photons))
    if inp.n_photons < 1:
        raise InvalidInputError(ErrorMessages.NO_PHOTONS)


def stage_unitaries(mesh: MeshProgram, blocks):
    """Cumulative transfer matrix after every stage."""
    out = []
    propagate(mesh, blocks, stages=lambda k, state: out.append(state.copy()))
    return out


def _observables(u, inp: OccupationVector):
    counts = np.asarray(inp.counts, dtype=float)
    occupation = (np.abs(u) ** 2) @ counts / inp.n_photons
    if inp.n_photons == 1:
        return occupation, None
    a, b = inp.modes()
    coincidence = 2.0 * np.abs(u[:, a] * u[:, b]) ** 2 / inp.factorial_norm()
    return occupation, coincidence


def _circuit(mesh, inp, noise, circuit):
    if noise is None or noise.is_noiseless:
        blocks = ideal_blocks(mesh.thetas, mesh.phis)
    else:
        alpha, beta = draw_errors(noise, mesh.n_couplings, circuit)
        blocks = lossy_blocks(mesh.thetas, mesh.phis, alpha, beta)
    stages = [_observables(u, inp) for u in stage_unitaries(mesh, blocks)]
    occupation = np.array([s[0] for s in stages])
    coincidence = None if inp.n_photons == 1 else np.array([s[1] for s in stages])
    return occupation, coincidence


def run_transport(topology='scf', n_modes=8, stages=None, inp=None, noise: NoiseModel = None, n_circuits=1,
                  threads=1, progress=False):
    """
    Stage-by-stage photon transport through an all-50:50 mesh.
    :param topology: any name accepted by build_topology
    :param inp: one- or two-photon occupation, default one photon in mode n_modes // 2
    :param noise: optional splitter-error model; circuits draw instances 0..n_circuits-1
    :return: TransportRecord averaged over the circuits
    """
    inp = OccupationVector.from_modes(n_modes, [n_modes // 2]) if inp is None else as_occupation(inp)
    _check_input(inp, n_modes)
    if n_circuits < 1:
        raise InvalidInputError(ErrorMessages.TOO_FEW_SAMPLES, str(n_circuits))
    mesh = transport_mesh(topology, n_modes, stages)
    run = partial(_circuit, mesh, inp, noise)
    desc = 'transport {} n={}'.format(topology, n_modes)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(tqdm(pool.map(run, range(n_circuits)), total=n_circuits, desc=desc,
                                disable=not progress))
    else:
        results = [run(c) for c in tqdm(range(n_circuits), desc=desc, disable=not progress)]

    occupation = np.mean([r[0] for r in results], axis=0)
    coincidence = None if inp.n_photons == 1 else np.mean([r[1] for r in results], axis=0)
    record = TransportRecord(topology=topology, n_modes=n_modes, input_pattern=inp.counts,
                             sigma=0.0 if noise is None else noise.sigma, n_circuits=n_circuits,
                             occupation=occupation, coincidence=coincidence,
                             ipr_per_stage=tuple(ipr(row) for row in occupation),
                             bunching_per_stage=() if coincidence is None else
                             tuple(float(x) for x in coincidence.sum(axis=1)))
    logger.info('transport %s n=%d stages=%d: IPR %s', topology, n_modes, record.stages,
                ' '.join('{:.2f}'.format(x) for x in record.ipr_per_stage))
    return record
