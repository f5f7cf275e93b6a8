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

from greenmachine.exceptions import DegenerateDeviceError
from greenmachine.mzi.mzi_params import MZIParams, SplittingBounds
from greenmachine.utils import error_messages as ErrorMessages

ROUNDING_TOL = 1e-14

# All block builders broadcast over array arguments and return (..., 2, 2).


def _splitter(error):
    """e^{-i(error + pi/4) sigma_x}."""
    a = np.asarray(error, dtype=float) + np.pi / 4
    c = np.cos(a)
    s = -1j * np.sin(a)
    return np.stack([np.stack([c, s], axis=-1), np.stack([s, c], axis=-1)], axis=-2)


def _arms(theta, gamma1, gamma2):
    """diag(gamma1, gamma2) e^{-i (theta/2) sigma_z}."""
    theta = np.asarray(theta, dtype=float)
    top = np.asarray(gamma1, dtype=float) * np.exp(-0.5j * theta)
    bottom = np.asarray(gamma2, dtype=float) * np.exp(0.5j * theta)
    top, bottom = np.broadcast_arrays(top, bottom)
    zero = np.zeros_like(top)
    return np.stack([np.stack([top, zero], axis=-1), np.stack([zero, bottom], axis=-1)], axis=-2)


def _input_phase(phi):
    phi = np.asarray(phi, dtype=float)
    one = np.ones_like(phi, dtype=complex)
    zero = np.zeros_like(one)
    return np.stack([np.stack([np.exp(1j * phi), zero], axis=-1), np.stack([zero, one], axis=-1)], axis=-2)


def ideal_blocks(theta, phi):
    """T(theta, phi) = i e^{i theta/2} [[e^{i phi} sin, cos], [e^{i phi} cos, -sin]] of theta/2."""
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    theta, phi = np.broadcast_arrays(theta, phi)
    pre = np.asarray(1j * np.exp(0.5j * theta))
    s = np.sin(theta / 2)
    c = np.cos(theta / 2)
    ep = np.exp(1j * phi)
    return pre[..., None, None] * np.stack([np.stack([ep * s, c + 0j], axis=-1),
                                            np.stack([ep * c, -s + 0j], axis=-1)], axis=-2)


def lossy_blocks(theta, phi, alpha=0.0, beta=0.0, gamma1=1.0, gamma2=1.0):
    """-e^{i theta/2} E(beta) diag(G1, G2) e^{-i theta/2 sigma_z} E(alpha) diag(e^{i phi}, 1)."""
    theta = np.asarray(theta, dtype=float)
    product = _splitter(beta) @ _arms(theta, gamma1, gamma2) @ _splitter(alpha) @ _input_phase(phi)
    return np.asarray(-np.exp(0.5j * theta))[..., None, None] * product


def ideal_transfer(theta, phi):
    return ideal_blocks(theta, phi)


def noisy_transfer(p: MZIParams):
    """Coherent-error MZI; arm transmissions are taken as 1."""
    return lossy_blocks(p.theta, p.phi, p.alpha, p.beta)


def lossy_transfer(p: MZIParams):
    return lossy_blocks(p.theta, p.phi, p.alpha, p.beta, p.gamma1, p.gamma2)


def splitting_ratio(t):
    """|s| = |T11 / T12| for a (..., 2, 2) block; inf where T12 vanishes."""
    t = np.asarray(t)
    num = np.abs(t[..., 0, 0])
    den = np.abs(t[..., 0, 1])
    with np.errstate(divide='ignore', invalid='ignore'):
        return np.where(den > 0, num / np.where(den > 0, den, 1.0), np.inf)


def _difference(x, y):
    """|x - y|, zero when x and y agree to rounding."""
    d = abs(x - y)
    return 0.0 if d <= ROUNDING_TOL * (x + y) else d


def _ratio(num, den):
    if den > 0:
        return num / den
    return np.inf if num > 0 else 0.0


def splitting_bounds(p: MZIParams):
    """
    Range of |s| reachable by sweeping theta. Both extremes occur at
    theta in {0, pi}, where the arm phasors align or oppose.
    """
    if p.gamma1 == 0 and p.gamma2 == 0:
        raise DegenerateDeviceError(ErrorMessages.DEGENERATE_DEVICE)
    a = p.alpha + np.pi / 4
    b = p.beta + np.pi / 4
    cc = abs(np.cos(a) * np.cos(b))
    ss = abs(np.sin(a) * np.sin(b))
    sc = abs(np.sin(a) * np.cos(b))
    cs = abs(np.cos(a) * np.sin(b))
    g1, g2 = p.gamma1, p.gamma2
    lower = _ratio(_difference(g1 * cc, g2 * ss), g1 * sc + g2 * cs)
    upper = _ratio(g1 * cc + g2 * ss, _difference(g1 * sc, g2 * cs))
    lower, upper = sorted((float(lower), float(upper)))
    return SplittingBounds(lower=lower, upper=upper)
