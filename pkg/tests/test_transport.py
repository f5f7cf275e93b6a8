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
import pytest

from greenmachine.exceptions import InvalidDistributionError, InvalidPatternError, SizeLimitError
from greenmachine.fock import OccupationVector, evolve
from greenmachine.noise import NoiseKind, NoiseModel
from greenmachine.transport import ipr, run_transport, stage_unitaries, transport_mesh
from greenmachine.mzi.transfer import ideal_blocks


def test_ipr_values():
    assert ipr(np.full(8, 1 / 8)) == pytest.approx(8.0)
    assert ipr([0, 0, 1, 0]) == pytest.approx(1.0)
    assert ipr([0.5, 0.5, 0, 0]) == pytest.approx(2.0)
    with pytest.raises(InvalidDistributionError):
        ipr([0.5, 0.4])


def test_scf_single_photon_diffuses_then_localizes():
    record = run_transport('scf', 8, inp=OccupationVector.from_modes(8, [4]))
    assert record.stages == 7
    assert record.ipr_per_stage == pytest.approx([2, 4, 2, 4, 8, 4, 2], abs=1e-9)
    assert np.allclose(record.occupation[4], 1 / 8)
    assert np.allclose(np.sort(record.occupation[6])[-2:], 0.5)
    assert record.localization_signature() == (5, 7)


def test_pruned_depth_seven_is_the_expressive_mesh():
    pruned = run_transport('pruned-7', 8)
    full = run_transport('scf', 8)
    assert np.allclose(pruned.occupation, full.occupation)


def test_probability_is_conserved_per_stage():
    record = run_transport('scf', 16, inp=OccupationVector.from_modes(16, [3, 11]))
    assert np.allclose(record.occupation.sum(axis=1), 1.0, atol=1e-9)


def test_clements_spread_stays_in_the_light_cone():
    n, start = 16, 8
    record = run_transport('clements', n, inp=OccupationVector.from_modes(n, [start]))
    for s, row in enumerate(record.occupation):
        far = [i for i in range(n) if abs(i - start) > s + 1]
        assert np.all(row[far] < 1e-12)
    assert record.localization_signature() is None


def test_hom_bunching_at_the_coupling_stage():
    record = run_transport('scf', 8, inp=OccupationVector.from_modes(8, [0, 4]))
    assert record.bunching_per_stage[0] == pytest.approx(1.0, abs=1e-12)
    assert record.coincidence[0, 0] == pytest.approx(0.5, abs=1e-12)
    assert record.coincidence[0, 4] == pytest.approx(0.5, abs=1e-12)


def test_photons_on_opposite_parity_meet_only_after_a_nearest_neighbour_stage():
    record = run_transport('scf', 32, inp=OccupationVector.from_modes(32, [15, 16]))
    assert record.stages == 31
    assert np.all(np.asarray(record.bunching_per_stage[:15]) < 1e-12)


def test_coincidence_matches_fock_evolution():
    inp = OccupationVector.from_modes(8, [1, 6])
    mesh = transport_mesh('scf', 8)
    record = run_transport('scf', 8, inp=inp)
    u = stage_unitaries(mesh, ideal_blocks(mesh.thetas, mesh.phis))[3]
    dist = evolve(u, inp)
    for i in range(8):
        counts = [0] * 8
        counts[i] = 2
        assert record.coincidence[3, i] == pytest.approx(dist.probability(counts), abs=1e-12)


def test_two_photon_fock_input():
    record = run_transport('scf', 8, inp=OccupationVector.from_modes(8, [2, 2]))
    assert record.bunching_per_stage[0] == pytest.approx(0.5, abs=1e-12)
    assert np.allclose(record.occupation.sum(axis=1), 1.0)


def test_noisy_average_over_circuits():
    noise = NoiseModel(NoiseKind.uncorrelated, 0.02, seed=8)
    record = run_transport('scf', 8, noise=noise, n_circuits=10)
    assert record.n_circuits == 10 and record.sigma == 0.02
    assert np.allclose(record.occupation.sum(axis=1), 1.0, atol=1e-9)
    threaded = run_transport('scf', 8, noise=noise, n_circuits=10, threads=3)
    assert np.allclose(record.occupation, threaded.occupation)


def test_extra_stages_loop_the_layer_sequence():
    mesh = transport_mesh('scf', 8, stages=10)
    assert mesh.n_layers == 10
    assert mesh.pair_structure()[7] == mesh.pair_structure()[0]


def test_input_limits():
    with pytest.raises(SizeLimitError):
        run_transport('scf', 8, inp=OccupationVector.from_modes(8, [0, 1, 2]))
    with pytest.raises(InvalidPatternError):
        run_transport('scf', 8, inp=OccupationVector.from_modes(4, [0]))


def test_heatmap_files(tmp_path):
    record = run_transport('scf', 8, inp=OccupationVector.from_modes(8, [0, 4]))
    paths = record.write_heatmaps(tmp_path, prefix='hom')
    assert sorted(p.name for p in paths) == ['hom_coincidence.csv', 'hom_occupation.csv', 'hom_stages.csv']
    lines = (tmp_path / 'hom_occupation.csv').read_text().splitlines()
    assert lines[0].split(',') == ['stage'] + ['mode_{}'.format(i) for i in range(8)]
    assert len(lines) == 8
