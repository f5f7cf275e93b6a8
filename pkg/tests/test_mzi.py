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

from greenmachine.exceptions import DegenerateDeviceError, InvalidInputError
from greenmachine.mesh import blocks_to_unitary, mesh_to_unitary, scf_topology
from greenmachine.mzi import MZIParams, ideal_transfer, noisy_transfer, lossy_transfer, splitting_bounds, \
    splitting_ratio, ideal_blocks, lossy_blocks
from greenmachine.numerics import is_unitary


@pytest.fixture()
def theta_grid():
    return np.linspace(0.0, 2 * np.pi, 181)


def test_ideal_transfer_is_unitary():
    for theta, phi in [(0.0, 0.0), (0.4, 1.3), (np.pi / 2, 0.0), (2.9, 5.1)]:
        assert is_unitary(ideal_transfer(theta, phi))


def test_identity_setting():
    assert np.allclose(ideal_transfer(np.pi, np.pi), np.eye(2), atol=1e-15)


def test_balanced_setting_splits_evenly():
    t = ideal_transfer(np.pi / 2, 0.0)
    assert np.allclose(np.abs(t), np.full((2, 2), 1 / np.sqrt(2)))


def test_cross_setting_swaps_modes():
    t = ideal_transfer(0.0, 0.3)
    assert np.allclose(np.abs(t), [[0, 1], [1, 0]])


def test_noisy_transfer_without_errors_is_ideal():
    for theta, phi in [(0.0, 0.0), (0.7, 2.2), (np.pi, np.pi), (4.0, 0.5)]:
        assert np.allclose(noisy_transfer(MZIParams(theta, phi)), ideal_transfer(theta, phi), atol=1e-14)


def test_noisy_transfer_is_unitary():
    assert is_unitary(noisy_transfer(MZIParams(1.1, 0.4, alpha=0.05, beta=-0.02)))


def test_equal_splitter_errors_spoil_nulling():
    t = noisy_transfer(MZIParams(0.0, 0.0, alpha=0.1, beta=0.1))
    assert np.isclose(abs(t[0, 0]), np.sin(0.2))


def test_opposite_splitter_errors_cancel_at_cross():
    t = noisy_transfer(MZIParams(0.0, 0.0, alpha=0.1, beta=-0.1))
    assert abs(t[0, 0]) < 1e-12


def test_uniform_arm_loss_scales_transfer():
    p = MZIParams(0.9, 0.2, alpha=0.01, beta=0.03, gamma1=0.8, gamma2=0.8)
    assert np.allclose(lossy_transfer(p), 0.8 * noisy_transfer(p))


def test_blocks_broadcast_over_settings():
    thetas = np.array([0.1, 0.2, 0.3])
    blocks = lossy_blocks(thetas, 0.0, alpha=0.02)
    assert blocks.shape == (3, 2, 2)
    assert np.allclose(blocks[1], noisy_transfer(MZIParams(0.2, 0.0, alpha=0.02)))


def test_ideal_device_reaches_every_ratio():
    bounds = splitting_bounds(MZIParams())
    assert bounds.lower == 0.0
    assert bounds.upper == np.inf


def test_imbalanced_arms_bound_ratio():
    bounds = splitting_bounds(MZIParams(gamma1=0.9, gamma2=0.6))
    assert np.isclose(bounds.lower, 0.3 / 1.5)
    assert np.isclose(bounds.upper, 1.5 / 0.3)


def test_sweep_stays_within_bounds(theta_grid):
    p = MZIParams(alpha=0.05, beta=-0.12, gamma1=0.95, gamma2=0.7)
    bounds = splitting_bounds(p)
    ratios = splitting_ratio(lossy_blocks(theta_grid, 0.0, p.alpha, p.beta, p.gamma1, p.gamma2))
    assert all(bounds.contains(s) for s in ratios)
    # extremes are reached on the grid (theta = 0 and pi are grid points)
    assert np.isclose(ratios.min(), bounds.lower) and np.isclose(ratios.max(), bounds.upper)


def test_lossless_bounds_follow_splitter_errors():
    alpha, beta = 0.04, 0.1
    bounds = splitting_bounds(MZIParams(alpha=alpha, beta=beta))
    assert np.isclose(bounds.lower, np.tan(abs(alpha + beta)))
    assert np.isclose(bounds.upper, 1 / np.tan(abs(alpha - beta)))


def test_dark_arms_are_degenerate():
    with pytest.raises(DegenerateDeviceError):
        splitting_bounds(MZIParams(gamma1=0.0, gamma2=0.0))


def test_random_settings_give_unitary_blocks():
    rng = np.random.default_rng(2021)
    theta, phi = rng.uniform(0, 2 * np.pi, (2, 10000))
    alpha, beta = rng.normal(0.0, 0.1, (2, 10000))
    blocks = lossy_blocks(theta, phi, alpha, beta)
    gram = np.swapaxes(blocks.conj(), -1, -2) @ blocks
    assert np.max(np.abs(gram - np.eye(2))) < 1e-12
    assert np.max(np.abs(lossy_blocks(theta, phi) - ideal_blocks(theta, phi))) < 1e-12


def test_random_devices_stay_within_bounds():
    rng = np.random.default_rng(77)
    theta = np.linspace(0.0, np.pi, 10000)
    for _ in range(1000):
        alpha, beta = rng.normal(0.0, 0.1, 2)
        g1, g2 = rng.uniform(0.3, 1.0, 2)
        bounds = splitting_bounds(MZIParams(alpha=alpha, beta=beta, gamma1=g1, gamma2=g2))
        ratios = splitting_ratio(lossy_blocks(theta, 0.0, alpha, beta, g1, g2))
        assert bounds.contains(ratios.min()) and bounds.contains(ratios.max())


def test_balanced_arm_loss_factors_out_of_a_mesh():
    rng = np.random.default_rng(31)
    mesh = scf_topology(8, 'minimal')
    mesh = mesh.with_parameters(rng.uniform(0, np.pi, mesh.n_couplings), rng.uniform(0, 2 * np.pi, mesh.n_couplings))
    ideal = mesh_to_unitary(mesh)
    for g in rng.uniform(0.5, 1.0, 20):
        lossy = blocks_to_unitary(mesh, lossy_blocks(mesh.thetas, mesh.phis, gamma1=g, gamma2=g))
        assert np.allclose(lossy, g ** mesh.n_layers * ideal, atol=1e-12)


def test_settings_must_be_finite():
    with pytest.raises(InvalidInputError):
        MZIParams(theta=np.nan)
    with pytest.raises(InvalidInputError):
        MZIParams(phi=np.inf)


def test_arm_transmissions_lie_in_unit_interval():
    with pytest.raises(InvalidInputError):
        MZIParams(gamma1=1.5)
    with pytest.raises(InvalidInputError):
        MZIParams(gamma2=-0.1)
