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

import numpy as np

from greenmachine.mesh.mesh_program import Coupling, MeshProgram, TopologyType
from greenmachine.mzi.transfer import ideal_blocks
from greenmachine.numerics.matrix import check_unitary
from greenmachine.utils import constants, helper

logger = logging.getLogger(__name__)


def _null_from_right(x, y):
    """(theta, phi) with (U T^dag) killing x in the row [x, y]."""
    theta = 2 * np.arctan2(abs(y), abs(x))
    phi = -np.angle(-y / x) if abs(x) > 0 and abs(y) > 0 else 0.0
    return theta, phi


def _null_from_left(x, y):
    """(theta, phi) with (T U) killing y in the column [x, y]."""
    theta = 2 * np.arctan2(abs(x), abs(y))
    phi = np.angle(y / x) if abs(x) > 0 and abs(y) > 0 else 0.0
    return theta, phi


def _rotate_columns(u, m, t):
    """U <- U T^dag on columns (m, m + 1)."""
    cols = u[:, [m, m + 1]] @ t.conj().T
    u[:, m] = cols[:, 0]
    u[:, m + 1] = cols[:, 1]


def _rotate_rows(u, m, t):
    """U <- T U on rows (m, m + 1)."""
    rows = t @ u[[m, m + 1], :]
    u[m, :] = rows[0]
    u[m + 1, :] = rows[1]


def _layer_asap(n, sequence):
    """Group an application-ordered coupling list into layers, earliest free layer first."""
    ready = [0] * n
    layers = []
    for c in sequence:
        k = max(ready[c.i], ready[c.j])
        if k == len(layers):
            layers.append([])
        layers[k].append(c)
        ready[c.i] = ready[c.j] = k + 1
    return tuple(tuple(sorted(layer, key=lambda c: c.i)) for layer in layers)


def clements_decompose(u, tol=constants.UNITARY_TOL):
    """
    Rectangular decomposition of a unitary by nulling elements from
    alternating sides, then pushing the leftover diagonal through the
    left-hand blocks so every block sits between the input and a final
    output phase screen.
    :param u: n x n unitary
    :return: MeshProgram in the Clements topology, exact (not only up to phase)
    """
    u = check_unitary(helper.check_square(u), tol)
    n = u.shape[0]
    work = np.array(u, dtype=complex)
    right = []
    left = []
    for i in range(n - 1):
        for j in range(i + 1):
            if i % 2 == 0:
                m = i - j
                row = n - 1 - j
                theta, phi = _null_from_right(work[row, m], work[row, m + 1])
                _rotate_columns(work, m, ideal_blocks(theta, phi))
                right.append((m, theta, phi))
            else:
                m = n + j - i - 2
                theta, phi = _null_from_left(work[m, j], work[m + 1, j])
                _rotate_rows(work, m, ideal_blocks(theta, phi))
                left.append((m, theta, phi))

    d = np.diagonal(work).copy()
    residual = np.linalg.norm(work - np.diag(d))
    logger.debug('clements nulling residual %.3e for n=%d', residual, n)

    # U = L_1^dag ... L_a^dag D R_b ... R_1; move D to the output.
    pushed = []
    for m, theta, phi in reversed(left):
        d1, d2 = d[m], d[m + 1]
        new_phi = np.angle(d1 / d2)
        d[m] = -np.exp(-1j * theta) * np.exp(-1j * phi) * d2
        d[m + 1] = -np.exp(-1j * theta) * d2
        pushed.append(Coupling(m, m + 1, float(theta), float(helper.wrap_phase(new_phi))))

    sequence = [Coupling(m, m + 1, float(theta), float(helper.wrap_phase(phi))) for m, theta, phi in right]
    sequence.extend(pushed)
    layers = _layer_asap(n, sequence)
    phases = helper.wrap_phase(np.angle(d))
    logger.info('decomposed %dx%d unitary into %d couplings over %d layers', n, n, len(sequence), len(layers))
    return MeshProgram(n, layers, tuple(phases), topology=TopologyType.clements)
