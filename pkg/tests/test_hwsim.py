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
from pydantic import ValidationError

from greenmachine.exceptions import DimensionError, SimulationError
from greenmachine.hwsim import HardwareConfig, MZIDefaults, simulate, loss_budget
from greenmachine.mesh import MeshProgram, clements_topology, scf_topology, prune_to_depth, mesh_to_unitary
from greenmachine.noise import NoiseKind, NoiseModel, apply_noise
from greenmachine.numerics import distance_up_to_global_phase, is_unitary
from greenmachine.scheduler import compile_schedule


def random_settings(mesh, rng):
    return mesh.with_parameters(rng.uniform(0, np.pi, mesh.n_couplings),
                                rng.uniform(0, 2 * np.pi, mesh.n_couplings),
                                rng.uniform(0, 2 * np.pi, mesh.n_modes))


def topologies():
    for n in (4, 8, 16):
        yield clements_topology(n), HardwareConfig.for_clements()
        yield scf_topology(n, 'minimal'), HardwareConfig.for_scf(n)
    yield scf_topology(8), HardwareConfig.for_scf(8)
    for depth in range(3, 8):
        yield prune_to_depth(depth), HardwareConfig.for_scf(8)


@pytest.fixture()
def minimal8():
    mesh = scf_topology(8, 'minimal')
    return mesh.with_parameters(np.full(mesh.n_couplings, np.pi / 2), np.zeros(mesh.n_couplings))


def test_simulation_matches_mesh():
    rng = np.random.default_rng(2024)
    for topology, hw in topologies():
        for _ in range(25):
            mesh = random_settings(topology, rng)
            realized = simulate(compile_schedule(mesh, hw), hw)
            assert distance_up_to_global_phase(realized, mesh_to_unitary(mesh)) < 1e-9


def test_balanced_minimal_scf_is_flat(minimal8):
    hw = HardwareConfig.for_scf(8)
    u = simulate(compile_schedule(minimal8, hw), hw)
    assert np.allclose(np.abs(u), 1 / np.sqrt(8), atol=1e-12)
    assert is_unitary(u)


def test_zero_rounds_is_identity():
    hw = HardwareConfig.for_clements()
    assert np.allclose(simulate(compile_schedule(MeshProgram(5, ()), hw), hw), np.eye(5))


def test_mzi_loss_per_round(minimal8):
    hw = HardwareConfig.for_scf(8, eta_bs=0.1)
    u = simulate(compile_schedule(minimal8, hw), hw)
    assert np.allclose(np.sum(np.abs(u) ** 2, axis=0), 10 ** (-0.1 * 3 / 10))


def test_uniform_loss_factors_out():
    rng = np.random.default_rng(5)
    mesh = random_settings(clements_topology(6), rng)
    lossless = HardwareConfig.for_clements()
    lossy = HardwareConfig.for_clements(eta_bs=0.2, eta_i=0.01, eta_o=0.01, switch_loss=0.05)
    u0 = simulate(compile_schedule(mesh, lossless), lossless)
    u1 = simulate(compile_schedule(mesh, lossy), lossy)
    db_per_round = 0.2 + 0.01 * lossy.fiber_length(1) + 0.01 * lossy.fiber_length(6) + 2 * 0.05
    g = 10 ** (-db_per_round / 20)
    assert np.allclose(u1, g ** 6 * u0, atol=1e-10)


def test_lossy_columns_shrink():
    rng = np.random.default_rng(6)
    mesh = random_settings(prune_to_depth(5), rng)
    hw = HardwareConfig.for_scf(8, mzi=MZIDefaults(gamma1=0.9, gamma2=0.7))
    u = simulate(compile_schedule(mesh, hw), hw)
    assert np.all(np.linalg.norm(u, axis=0) <= 1 + 1e-12)
    assert not np.allclose(np.linalg.norm(u, axis=0), 1)


@pytest.mark.parametrize('kind', [NoiseKind.correlated, NoiseKind.uncorrelated])
def test_noise_draws_follow_mesh_order(minimal8, kind):
    hw = HardwareConfig.for_scf(8)
    model = NoiseModel(kind, 0.02, seed=8)
    realized = simulate(compile_schedule(minimal8, hw), hw, model, instance=3)
    assert np.allclose(realized, apply_noise(minimal8, model, instance=3), atol=1e-12)


def test_pass_through_bins_see_splitter_errors():
    rng = np.random.default_rng(7)
    mesh = random_settings(clements_topology(4), rng)
    hw = HardwareConfig.for_clements()
    model = NoiseModel(NoiseKind.correlated, 0.05, seed=1)
    schedule = compile_schedule(mesh, hw)
    realized = simulate(schedule, hw, model)
    assert is_unitary(simulate(schedule, hw))
    assert not np.allclose(realized, apply_noise(mesh, model))
    # the top-port leak of a noisy identity is lost, never gained
    norms = np.linalg.norm(realized, axis=0)
    assert np.all(norms <= 1 + 1e-12)
    assert np.min(norms) < 1 - 1e-6


def test_paired_bins_stay_lossless_under_noise():
    mesh = random_settings(scf_topology(8, 'minimal'), np.random.default_rng(5))
    hw = HardwareConfig.for_scf(8)
    realized = simulate(compile_schedule(mesh, hw), hw, NoiseModel(NoiseKind.correlated, 0.05, seed=2))
    assert is_unitary(realized, tol=1e-9)


def test_scf_hardware_needs_power_of_two():
    with pytest.raises(DimensionError):
        HardwareConfig.for_scf(6)


def test_static_mzi_errors_apply():
    rng = np.random.default_rng(9)
    mesh = random_settings(scf_topology(4, 'minimal'), rng)
    ideal = HardwareConfig.for_scf(4)
    imperfect = HardwareConfig.for_scf(4, mzi=MZIDefaults(alpha=0.03, beta=-0.01))
    u = simulate(compile_schedule(mesh, ideal), imperfect)
    assert is_unitary(u)
    assert distance_up_to_global_phase(u, mesh_to_unitary(mesh)) > 1e-3


def test_hardware_mismatch():
    schedule = compile_schedule(scf_topology(8, 'minimal'), HardwareConfig.for_scf(8))
    with pytest.raises(SimulationError):
        simulate(schedule, HardwareConfig.for_clements())


def test_outer_loop_budget():
    hw = HardwareConfig.for_clements(tau=100e-12, eta_o=0.2e-3)
    budget = loss_budget(compile_schedule(clements_topology(100), hw), hw)
    assert np.isclose(budget.breakdown['outer_loop'], 0.04)
    assert np.isclose(budget.total_db, 0.04)


def test_budget_terms():
    mesh = scf_topology(8, 'minimal')
    assert loss_budget(compile_schedule(mesh, HardwareConfig.for_scf(8)), HardwareConfig.for_scf(8)).total_db == 0
    hw = HardwareConfig.for_scf(8, eta_bs=0.1, switch_loss=0.5)
    budget = loss_budget(compile_schedule(mesh, hw), hw)
    assert np.isclose(budget.breakdown['mzi'], 0.3)
    assert np.isclose(budget.breakdown['switch'], 3.0)
    assert set(budget.to_dict()['breakdown']) == {'mzi', 'inner_delay', 'outer_loop', 'switch'}


def test_hardware_validation():
    with pytest.raises(ValidationError):
        HardwareConfig(tau=0)
    with pytest.raises(ValidationError):
        HardwareConfig(delay_set=[0, 1])
    with pytest.raises(ValidationError):
        HardwareConfig(eta_bs=-1)
    assert HardwareConfig.for_scf(16).delay_set == [1, 2, 4, 8]
