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

from greenmachine.exceptions import DimensionError, InvalidInputError
from greenmachine.mesh import clements_decompose, clements_topology, mesh_to_unitary
from greenmachine.noise import NoiseKind, NoiseModel, draw_errors, apply_noise, predict_infidelity, \
    sample_infidelity, infidelity_samples, scaling_point
from greenmachine.numerics import haar_random_unitary, is_unitary


@pytest.fixture()
def mesh8():
    return clements_decompose(haar_random_unitary(8, seed=17))


def test_zero_sigma_is_ideal(mesh8):
    for kind in NoiseKind:
        noisy = apply_noise(mesh8, NoiseModel(kind, 0.0, seed=1))
        assert np.allclose(noisy, mesh_to_unitary(mesh8), atol=1e-13)


def test_noisy_mesh_stays_unitary(mesh8):
    for kind in NoiseKind:
        assert is_unitary(apply_noise(mesh8, NoiseModel(kind, 0.05, sigma_jitter=0.02, seed=2), instance=3))


def test_correlated_draws_share_one_pair():
    alpha, beta = draw_errors(NoiseModel(NoiseKind.correlated, 0.01, seed=4), 28, instance=5)
    assert np.all(alpha == alpha[0]) and np.all(beta == beta[0])
    assert alpha[0] != beta[0]


def test_uncorrelated_draws_start_with_the_correlated_pair():
    corr = draw_errors(NoiseModel(NoiseKind.correlated, 0.01, seed=4), 28, instance=5)
    uncorr = draw_errors(NoiseModel(NoiseKind.uncorrelated, 0.01, seed=4), 28, instance=5)
    assert uncorr[0][0] == corr[0][0] and uncorr[1][0] == corr[1][0]
    assert len(set(uncorr[0])) == 28


def test_hybrid_without_jitter_is_correlated():
    hybrid = draw_errors(NoiseModel(NoiseKind.hybrid, 0.01, seed=4), 10, instance=1)
    corr = draw_errors(NoiseModel(NoiseKind.correlated, 0.01, seed=4), 10, instance=1)
    assert np.array_equal(hybrid[0], corr[0]) and np.array_equal(hybrid[1], corr[1])


def test_draws_depend_on_instance():
    model = NoiseModel(NoiseKind.uncorrelated, 0.01, seed=4)
    assert not np.allclose(draw_errors(model, 6, 0)[0], draw_errors(model, 6, 1)[0])


def test_negative_sigma_is_rejected():
    with pytest.raises(InvalidInputError):
        NoiseModel(NoiseKind.correlated, -0.1)


def test_errors_scale_quadratically():
    small = sample_infidelity(NoiseModel(NoiseKind.uncorrelated, 1e-3, seed=9), 8, sample=2, n_photons=2)
    large = sample_infidelity(NoiseModel(NoiseKind.uncorrelated, 2e-3, seed=9), 8, sample=2, n_photons=2)
    for name in ('state_infidelity', 'fock_infidelity', 'matrix_error'):
        assert np.isclose(getattr(large, name) / getattr(small, name), 4.0, rtol=0.05)


def test_uncorrelated_matrix_error_tracks_first_order_mean():
    n, sigma = 16, 0.01
    samples = infidelity_samples(NoiseModel(NoiseKind.uncorrelated, sigma, seed=12), n, 200)
    median = np.median([s.matrix_error for s in samples])
    assert abs(median / ((n - 1) * sigma ** 2 / 2) - 1) < 0.2


def test_two_photons_roughly_double_the_error():
    model = NoiseModel(NoiseKind.uncorrelated, 0.01, seed=13)
    one = np.mean([s.fock_infidelity for s in infidelity_samples(model, 8, 600, n_photons=1)])
    two = np.mean([s.fock_infidelity for s in infidelity_samples(model, 8, 600, n_photons=2)])
    assert 1.6 < two / one < 3.0


def test_samples_do_not_depend_on_threads():
    model = NoiseModel(NoiseKind.correlated, 0.02, seed=14)
    serial = infidelity_samples(model, 4, 6, threads=1)
    threaded = infidelity_samples(model, 4, 6, threads=3)
    assert [s.sample for s in threaded] == list(range(6))
    assert np.allclose([s.matrix_error for s in serial], [s.matrix_error for s in threaded], rtol=1e-12)


def test_too_many_photons():
    with pytest.raises(DimensionError):
        sample_infidelity(NoiseModel(NoiseKind.correlated, 0.01, seed=1), 4, 0, n_photons=5)


def test_predictions():
    assert np.isclose(predict_infidelity('uncorrelated', 256, 0.01, 1), 0.0128)
    for n, sigma in [(16, 0.003), (64, 0.01)]:
        ratio = predict_infidelity('correlated', n, sigma) / predict_infidelity('uncorrelated', n, sigma)
        assert np.isclose(ratio, 1 / np.sqrt(2))
    assert np.isclose(predict_infidelity(NoiseKind.uncorrelated, 32, 0.01, 2),
                      2 * predict_infidelity(NoiseKind.uncorrelated, 32, 0.01, 1))


def test_prediction_preconditions():
    with pytest.raises(DimensionError):
        predict_infidelity('correlated', 1, 0.01)
    with pytest.raises(InvalidInputError):
        predict_infidelity('uncorrelated', 8, 0.01, 0)
    with pytest.raises(InvalidInputError, match=r'sqrt\(N log2 N\)'):
        predict_infidelity('hybrid', 8, 0.01)


def test_scaling_point_summary():
    point = scaling_point(NoiseModel(NoiseKind.correlated, 0.01, seed=3), 4, 10)
    assert point.samples == 10
    assert np.isclose(point.prediction, 4 * 1e-4 / (2 * np.sqrt(2)))
    assert point.matrix_error.min <= point.matrix_error.median <= point.matrix_error.max
    row = point.to_row()
    assert row['kind'] == 'correlated' and 'fock_infidelity_q75' in row


def test_bar_mesh_with_noise_is_unitary():
    mesh = clements_topology(4)
    assert is_unitary(apply_noise(mesh, NoiseModel(NoiseKind.uncorrelated, 0.1, seed=0)))


@pytest.mark.parametrize('n, sigma, samples', [(16, 1e-2, 600), (64, 1e-3, 200)])
def test_correlated_errors_scale_below_uncorrelated(n, sigma, samples):
    corr = scaling_point(NoiseModel(NoiseKind.correlated, sigma, seed=21), n, samples)
    uncorr = scaling_point(NoiseModel(NoiseKind.uncorrelated, sigma, seed=21), n, samples)
    ratio = corr.matrix_error.median / uncorr.matrix_error.median
    assert abs(ratio * np.sqrt(2) - 1) < 0.15
    assert abs(uncorr.matrix_error.median / uncorr.prediction - 1) < 0.2
    assert corr.matrix_error.iqr >= uncorr.matrix_error.iqr


@pytest.mark.parametrize('n', [8, 16, 32])
def test_two_photon_median_error_doubles(n):
    model = NoiseModel(NoiseKind.uncorrelated, 0.01, seed=22)
    one = scaling_point(model, n, 300, n_photons=1)
    two = scaling_point(model, n, 300, n_photons=2)
    assert abs(two.fock_infidelity.median / one.fock_infidelity.median / 2 - 1) < 0.25
