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
from dataclasses import dataclass

import numpy as np
import scipy.optimize

from greenmachine.mesh.evaluate import _layer_slices, apply_layer, mesh_to_unitary
from greenmachine.mesh.mesh_program import MeshProgram
from greenmachine.mzi.transfer import ideal_blocks
from greenmachine.numerics.matrix import check_unitary
from greenmachine.exceptions import DimensionError
from greenmachine.utils import error_messages as ErrorMessages
from greenmachine.utils import constants, helper

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FitResult:
    mesh: MeshProgram
    cost: float
    converged: bool
    restarts: int


def _block_derivatives(theta, phi):
    """dT/dtheta and dT/dphi, each (K, 2, 2)."""
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    pre = 1j * np.exp(0.5j * theta)
    s = np.sin(theta / 2)
    c = np.cos(theta / 2)
    ep = np.exp(1j * phi)
    zero = np.zeros_like(pre)
    m = np.stack([np.stack([ep * s, c + 0j], axis=-1), np.stack([ep * c, -s + 0j], axis=-1)], axis=-2)
    dm = 0.5 * np.stack([np.stack([ep * c, -s + 0j], axis=-1), np.stack([-ep * s, -c + 0j], axis=-1)], axis=-2)
    d_theta = pre[:, None, None] * (0.5j * m + dm)
    d_phi = pre[:, None, None] * np.stack([np.stack([1j * ep * s, zero], axis=-1),
                                           np.stack([1j * ep * c, zero], axis=-1)], axis=-2)
    return d_theta, d_phi


def _split(mesh, x):
    k = mesh.n_couplings
    return x[:k], x[k:2 * k], x[2 * k:]


def mesh_cost(mesh: MeshProgram, target):
    """||M - U||_F^2 = 2N - 2 Re tr(U^dag M) for the programmed mesh M."""
    m = mesh_to_unitary(mesh)
    n = mesh.n_modes
    return float(2 * n - 2 * np.real(np.vdot(target, m)))


def mesh_gradient(mesh: MeshProgram, target, x=None):
    """
    Cost and analytic gradient over the flat parameter vector
    [thetas, phis, output_phases].
    :return: (cost, gradient)
    """
    target = np.asarray(target, dtype=complex)
    if x is None:
        x = np.concatenate([mesh.thetas, mesh.phis, np.asarray(mesh.output_phases)])
    thetas, phis, omegas = _split(mesh, np.asarray(x, dtype=float))
    n = mesh.n_modes
    blocks = ideal_blocks(thetas, phis).reshape(-1, 2, 2)
    d_theta, d_phi = _block_derivatives(thetas, phis)
    slices = _layer_slices(mesh)

    # prefix products B_l, the state entering layer l
    prefix = []
    state = np.eye(n, dtype=complex)
    for start, stop, rows_i, rows_j in slices:
        prefix.append(state.copy())
        if stop > start:
            apply_layer(state, blocks[start:stop], rows_i, rows_j)
    product = state
    screen = np.exp(1j * omegas)
    cost = 2 * n - 2 * np.real(np.sum(screen * np.sum(product * target.conj(), axis=1)))

    grad_theta = np.zeros_like(thetas)
    grad_phi = np.zeros_like(phis)
    grad_omega = -2 * np.real(1j * screen * np.sum(product * target.conj(), axis=1))

    # suffix W_l = U^dag D A_l, built right to left
    suffix = target.conj().T * screen[None, :]
    for (start, stop, rows_i, rows_j), before in zip(reversed(slices), reversed(prefix)):
        if stop == start:
            continue
        g_ii = np.einsum('ck,kc->c', before[rows_i], suffix[:, rows_i])
        g_ij = np.einsum('ck,kc->c', before[rows_i], suffix[:, rows_j])
        g_ji = np.einsum('ck,kc->c', before[rows_j], suffix[:, rows_i])
        g_jj = np.einsum('ck,kc->c', before[rows_j], suffix[:, rows_j])
        for derivative, out in ((d_theta, grad_theta), (d_phi, grad_phi)):
            d = derivative[start:stop]
            out[start:stop] = -2 * np.real(g_ii * d[:, 0, 0] + g_ji * d[:, 0, 1]
                                           + g_ij * d[:, 1, 0] + g_jj * d[:, 1, 1])
        suffix_t = np.ascontiguousarray(suffix.T)
        apply_layer(suffix_t, blocks[start:stop].transpose(0, 2, 1), rows_i, rows_j)
        suffix = suffix_t.T
    return float(cost), np.concatenate([grad_theta, grad_phi, grad_omega])


def fit_mesh(target, topology: MeshProgram, restarts=constants.FIT_RESTARTS, seed=None,
             tol=constants.FIT_TOL, max_restarts=None):
    """
    Program a fixed topology to a target unitary by L-BFGS from random
    starting points. Theta has period 2pi; it is optimised unbounded and
    wrapped onto [0, 2pi) like the phases.
    :param target: n x n unitary
    :param topology: mesh whose pair structure is kept; its settings are ignored
    :param restarts: random starts tried before the budget is extended
    :param seed: master seed for the starting points
    :param tol: stop once the squared Frobenius distance drops below this
    :param max_restarts: total budget; defaults to restarts * FIT_RESTART_GROWTH.
        Starts past the first `restarts` alternate between fresh random points
        and kicks around the best point found so far.
    :return: FitResult with the best mesh found
    """
    target = check_unitary(helper.check_square(target))
    if target.shape[0] != topology.n_modes:
        raise DimensionError(ErrorMessages.SHAPE_MISMATCH, str(target.shape), str(topology.n_modes))
    k = topology.n_couplings
    n = topology.n_modes
    restarts = max(1, restarts)
    budget = max(restarts, restarts * constants.FIT_RESTART_GROWTH if max_restarts is None else max_restarts)
    best_x, best_cost, tries = None, np.inf, 0
    for attempt in range(budget):
        rng = helper.rng_stream(seed, constants.STREAM_FIT, attempt)
        if attempt < restarts or attempt % 2 == 0:
            x0 = rng.uniform(0, 2 * np.pi, 2 * k + n)
        else:
            x0 = best_x + rng.normal(0.0, constants.FIT_KICK, best_x.shape)
        if attempt == restarts:
            logger.info('fit cost %.3e after %d restart(s), extending to %d', best_cost, restarts, budget)
        result = scipy.optimize.minimize(lambda x: mesh_gradient(topology, target, x), x0, jac=True,
                                         method='L-BFGS-B',
                                         options={'maxiter': 10000, 'ftol': 1e-16, 'gtol': 1e-12})
        tries = attempt + 1
        logger.debug('fit restart %d: cost %.3e after %d iterations', attempt, result.fun, result.nit)
        if result.fun < best_cost:
            best_x, best_cost = result.x, float(result.fun)
        if best_cost < tol:
            break
    thetas, phis, omegas = _split(topology, best_x)
    mesh = topology.with_parameters(helper.wrap_phase(thetas), helper.wrap_phase(phis), helper.wrap_phase(omegas))
    converged = best_cost < tol
    logger.info('fit %d-mode %s mesh: cost %.3e after %d restart(s), converged=%s',
                n, topology.topology.value, best_cost, tries, converged)
    return FitResult(mesh=mesh, cost=best_cost, converged=converged, restarts=tries)
