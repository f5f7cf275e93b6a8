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
import scipy.linalg

from greenmachine.exceptions import DimensionError, InvalidInputError
from greenmachine.utils import error_messages as ErrorMessages
from greenmachine.utils import constants, helper


def haar_random_unitary(n, seed=None):
    """
    Haar-distributed n x n unitary from the QR factorization of a complex
    Gaussian matrix, with the phases of diag(R) moved into Q.
    :param n: dimension, n >= 1
    :param seed: int seed or numpy Generator
    :return: complex ndarray (n, n)
    """
    if n < 1:
        raise DimensionError(ErrorMessages.INVALID_DIMENSION)
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)
    q, r = scipy.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_state(n, seed=None):
    """Haar-random normalized state vector of dimension n."""
    if n < 1:
        raise DimensionError(ErrorMessages.INVALID_DIMENSION)
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return v / np.linalg.norm(v)


def basis_state(n, k):
    v = np.zeros(n, dtype=complex)
    v[k] = 1.0
    return v


def is_unitary(m, tol=constants.UNITARY_TOL):
    m = helper.check_square(m)
    return bool(np.linalg.norm(m.conj().T @ m - np.eye(m.shape[0])) <= tol)


def check_unitary(m, tol=constants.UNITARY_TOL):
    if not is_unitary(m, tol):
        raise InvalidInputError(ErrorMessages.NOT_UNITARY)
    return np.asarray(m, dtype=complex)


def state_infidelity(u_ideal, u_actual, psi):
    """1 - |<psi| U_ideal^dag U_actual |psi>|^2."""
    u_ideal, u_actual = helper.check_same_shape(u_ideal, u_actual)
    psi = np.asarray(psi, dtype=complex)
    if psi.ndim != 1 or psi.shape[0] != u_ideal.shape[1]:
        raise DimensionError(ErrorMessages.SHAPE_MISMATCH, str(psi.shape), str(u_ideal.shape))
    if abs(np.vdot(psi, psi).real - 1.0) > constants.NORMALIZATION_TOL:
        raise InvalidInputError(ErrorMessages.NOT_NORMALIZED)
    overlap = np.vdot(u_ideal @ psi, u_actual @ psi)
    return float(1.0 - abs(overlap) ** 2)


def matrix_error(u_ideal, u_actual):
    """Normalized matrix error (1/4N) ||U_actual - U_ideal||_F^2."""
    u_ideal, u_actual = helper.check_same_shape(u_ideal, u_actual)
    n = u_ideal.shape[0]
    return float(np.linalg.norm(u_actual - u_ideal) ** 2 / (4.0 * n))


def distance_up_to_global_phase(u, v):
    """min over gamma of ||U - e^{i gamma} V||_F, aligned through the phase of Tr(V^dag U)."""
    u, v = helper.check_same_shape(u, v)
    overlap = np.vdot(v, u)
    phase = overlap / abs(overlap) if abs(overlap) > 0 else 1.0
    return float(np.linalg.norm(u - phase * v))
