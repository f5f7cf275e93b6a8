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

from greenmachine.mesh.mesh_program import MeshProgram
from greenmachine.mzi.transfer import ideal_blocks


def _layer_slices(mesh: MeshProgram):
    """(start, stop, rows_i, rows_j) for each layer in flat coupling order."""
    slices = []
    start = 0
    for layer in mesh.layers:
        stop = start + len(layer)
        rows_i = np.array([c.i for c in layer], dtype=int)
        rows_j = np.array([c.j for c in layer], dtype=int)
        slices.append((start, stop, rows_i, rows_j))
        start = stop
    return slices


def apply_layer(state, blocks, rows_i, rows_j):
    """Left-multiply the rows (i, j) of state by each 2x2 block."""
    top = state[rows_i]
    bottom = state[rows_j]
    state[rows_i] = blocks[:, 0, 0, None] * top + blocks[:, 0, 1, None] * bottom
    state[rows_j] = blocks[:, 1, 0, None] * top + blocks[:, 1, 1, None] * bottom
    return state


def propagate(mesh: MeshProgram, blocks, state=None, stages=None):
    """
    Push `state` (n x m, default identity) through the mesh with one 2x2
    block per coupling. Output phases are not applied.
    :param stages: optional callback(layer_index, state) after every layer
    """
    state = np.eye(mesh.n_modes, dtype=complex) if state is None else np.array(state, dtype=complex)
    vector = state.ndim == 1
    if vector:
        state = state[:, None]
    blocks = np.asarray(blocks, dtype=complex).reshape(-1, 2, 2)
    for k, (start, stop, rows_i, rows_j) in enumerate(_layer_slices(mesh)):
        if stop > start:
            apply_layer(state, blocks[start:stop], rows_i, rows_j)
        if stages is not None:
            stages(k, state[:, 0] if vector else state)
    return state[:, 0] if vector else state


def output_screen(mesh: MeshProgram):
    return np.exp(1j * np.asarray(mesh.output_phases, dtype=float))


def mesh_to_unitary(m: MeshProgram):
    """diag(e^{i output_phases}) times the layer products, earliest layer rightmost."""
    blocks = ideal_blocks(m.thetas, m.phis)
    u = propagate(m, blocks)
    return output_screen(m)[:, None] * u


def blocks_to_unitary(m: MeshProgram, blocks):
    return output_screen(m)[:, None] * propagate(m, blocks)
