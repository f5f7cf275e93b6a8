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

from greenmachine.exceptions import InvalidPatternError, SizeLimitError
from greenmachine.fock import permanent, permanent_naive, OccupationVector, patterns, output_amplitude, evolve, \
    fock_infidelity, classical_output_probability, save_distribution
from greenmachine.mesh import Coupling, MeshProgram, mesh_to_unitary
from greenmachine.mzi import ideal_transfer
from greenmachine.numerics import haar_random_unitary


@pytest.fixture()
def splitter():
    return ideal_transfer(np.pi / 2, 0.0)


def test_small_permanents():
    assert np.isclose(permanent(np.eye(2)), 1)
    a, b, c, d = 1 + 2j, 0.5, -1j, 3
    assert np.isclose(permanent([[a, b], [c, d]]), a * d + b * c)
    assert np.isclose(permanent(np.ones((3, 3))), 6)
    assert permanent(np.zeros((0, 0))) == 1


def test_ryser_matches_enumeration():
    rng = np.random.default_rng(1)
    for _ in range(100):
        n = int(rng.integers(1, 7))
        m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        exact = permanent_naive(m)
        assert abs(permanent(m) - exact) <= 1e-10 * max(1.0, abs(exact))


def test_permanent_size_limit():
    with pytest.raises(SizeLimitError):
        permanent(np.ones((9, 9)))


def test_patterns_are_colex():
    assert patterns(3, 1) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert patterns(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert len(patterns(4, 2)) == 10


def test_hong_ou_mandel_dip(splitter):
    assert abs(output_amplitude(splitter, (1, 1), (1, 1))) < 1e-12


def test_identity_keeps_pattern():
    assert np.isclose(output_amplitude(np.eye(3), (1, 0, 2), (1, 0, 2)), 1)


def test_two_photon_amplitudes_are_normalized():
    u = haar_random_unitary(4, seed=8)
    total = sum(abs(output_amplitude(u, (1, 1, 0, 0), out)) ** 2 for out in patterns(4, 2))
    assert abs(total - 1) < 1e-10


def test_photon_number_mismatch():
    with pytest.raises(InvalidPatternError):
        output_amplitude(np.eye(2), (1, 0), (1, 1))
    with pytest.raises(InvalidPatternError):
        OccupationVector((1, -1))


@pytest.mark.parametrize('n', [4, 8])
@pytest.mark.parametrize('n_photons', [1, 2, 3])
def test_unitary_evolution_preserves_probability(n, n_photons):
    u = haar_random_unitary(n, seed=n * 10 + n_photons)
    dist = evolve(u, OccupationVector.from_modes(n, range(n_photons)))
    assert abs(dist.total_probability() - 1) < 1e-10


def test_single_photon_is_matrix_column():
    u = haar_random_unitary(5, seed=2)
    dist = evolve(u, (0, 0, 1, 0, 0))
    assert np.allclose(dist.probabilities(), np.abs(u[:, 2]) ** 2)


def test_two_photons_bunch_at_balanced_coupling():
    mesh = MeshProgram(32, ((Coupling(15, 16, np.pi / 2, 0.0),),))
    dist = evolve(mesh_to_unitary(mesh), OccupationVector.from_modes(32, [15, 16]))
    bunched = sum(p for pattern, p in zip(dist.patterns, dist.probabilities()) if max(pattern) == 2)
    assert abs(bunched - 1) < 1e-12


def test_uniform_loss_postselects_every_photon():
    g = 0.9
    dist = evolve(g * np.eye(8), OccupationVector.from_modes(8, range(6)))
    assert np.isclose(dist.total_probability(), g ** 12)


def test_distinguishable_photons_do_not_interfere(splitter):
    assert np.isclose(classical_output_probability(splitter, (1, 1), (1, 1)), 0.5)
    assert abs(output_amplitude(splitter, (1, 1), (1, 1))) ** 2 < 1e-15


def test_fock_size_limits():
    with pytest.raises(SizeLimitError):
        evolve(np.eye(32), OccupationVector.from_modes(32, range(6)))
    with pytest.raises(SizeLimitError):
        evolve(np.eye(8), (7, 0, 0, 0, 0, 0, 0, 0))


def test_fock_infidelity():
    u = haar_random_unitary(6, seed=3)
    assert abs(fock_infidelity(u, u, (1, 0, 1, 0, 1, 0))) < 1e-12
    swap = np.eye(2)[::-1]
    assert np.isclose(fock_infidelity(np.eye(2), swap, (1, 0)), 1)


def test_distribution_records(tmp_path, splitter):
    dist = evolve(splitter, (1, 1))
    records = dist.to_records()
    assert [r['pattern'] for r in records] == [[2, 0], [1, 1], [0, 2]]
    assert np.isclose(records[0]['prob'], 0.5)
    assert np.isclose(dist.probability((0, 2)), 0.5)
    assert save_distribution(tmp_path / 'dist.json', dist).exists()
