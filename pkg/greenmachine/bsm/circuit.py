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
import math
from dataclasses import dataclass, replace
from typing import Tuple

import numpy as np

from greenmachine.exceptions import InvalidProgramError
from greenmachine.fock.fock import OccupationVector
from greenmachine.mesh.evaluate import mesh_to_unitary
from greenmachine.mesh.mesh_program import Coupling, MeshProgram
from greenmachine.mesh.topology import prune_to_depth, pruned_positions
from greenmachine.utils import error_messages as ErrorMessages
from greenmachine.utils import constants

logger = logging.getLogger(__name__)

BALANCED_THETA = math.pi / 2
BALANCED_PHI = 0.0
# idle couplings: ideally diag(-1, 1); two on one pair multiply to the identity
# even when every pass shares the same splitter error (alpha, beta)
BAR_THETA = math.pi
BAR_PHI = 0.0

QUBIT1_RAILS = (0, 2)
QUBIT2_RAILS = (4, 6)
ANCILLA_MODES = (1, 3, 5, 7)

# balanced couplings per position of the expressive [4, 2, 4, 1, 4, 2, 4] order
BOOSTED_STAGES = {
    0: ((0, 4), (2, 6)),
    1: ((0, 2), (4, 6), (1, 3), (5, 7)),
    3: ((0, 1), (2, 3), (4, 5), (6, 7)),
}
STANDARD_STAGES = {
    0: ((0, 4), (2, 6)),
}


@dataclass(frozen=True)
class BsmCircuit:
    """
    Eight-mode Bell measurement: two dual-rail qubits plus one ancilla
    photon in each ancilla mode, all detected after `program`.
    """

    program: MeshProgram
    qubit1_rails: Tuple[int, int] = QUBIT1_RAILS
    qubit2_rails: Tuple[int, int] = QUBIT2_RAILS
    ancilla_modes: Tuple[int, ...] = ANCILLA_MODES

    def __post_init__(self):
        modes = list(self.qubit1_rails) + list(self.qubit2_rails) + list(self.ancilla_modes)
        if sorted(modes) != list(range(self.program.n_modes)):
            raise InvalidProgramError(ErrorMessages.BSM_MODES, str(modes))

    @property
    def n_modes(self):
        return self.program.n_modes

    @property
    def n_photons(self):
        return 2 + len(self.ancilla_modes)

    @property
    def depth(self):
        return self.program.depth

    def input_pattern(self, bits):
        """Occupation for qubit values `bits` = (b1, b2) with the ancillas filled."""
        b1, b2 = bits
        modes = [self.qubit1_rails[b1], self.qubit2_rails[b2]] + list(self.ancilla_modes)
        return OccupationVector.from_modes(self.n_modes, modes)

    def unitary(self):
        return mesh_to_unitary(self.program)


def _staged_program(depth, stages):
    mesh = prune_to_depth(depth)
    layers = []
    for position, layer in zip(pruned_positions(depth), mesh.layers):
        active = set(stages.get(position, ()))
        layers.append(tuple(Coupling(c.i, c.j, BALANCED_THETA, BALANCED_PHI) if (c.i, c.j) in active
                            else Coupling(c.i, c.j, BAR_THETA, BAR_PHI) for c in layer))
    return replace(mesh, layers=tuple(layers))


def build_bsm_circuit(depth=constants.MIN_PRUNED_DEPTH):
    """
    Ancilla-boosted Bell measurement on the pruned SCF of the given depth.

    The distance-4 stage is the standard qubit splitter, the distance-2
    stage rotates the rails of each output port and pairs up the ancilla
    photons, and the distance-1 stage mixes every qubit-side mode with one
    ancilla mode. Every other coupling, including the layers added beyond
    depth 3, is an idle bar. Bars only add phases on modes that are either
    photon-number eigenstates at the input or never mixed again, so every
    depth decodes like depth 3 when noiseless. Under correlated noise the
    idle distance-4 bars cancel in pairs, which makes depth 5 equivalent to depth 3
    and clears the ancilla branch at depths 4 and 7.
    """
    circuit = BsmCircuit(_staged_program(depth, BOOSTED_STAGES))
    logger.debug('boosted BSM circuit at depth %d: %d couplings', depth, circuit.program.n_couplings)
    return circuit


def build_standard_bsm_circuit(depth=constants.MIN_PRUNED_DEPTH):
    """The unboosted reference: one splitter per rail pair, ancillas idle."""
    return BsmCircuit(_staged_program(depth, STANDARD_STAGES))


def reference_four_splitter():
    return 0.5 * np.array([[1, 1, 1, 1],
                           [1, -1, 1, -1],
                           [1, 1, -1, -1],
                           [1, -1, -1, 1]], dtype=complex)


def _embed(n, modes, block):
    u = np.eye(n, dtype=complex)
    u[np.ix_(modes, modes)] = block
    return u


def reference_bsm_unitary():
    """
    Phase-free transfer matrix of the boosted measurement: the four-splitter
    on (q1 rail 0, q1 rail 1, q2 rail 0, q2 rail 1), Hadamard splitters on
    the ancilla pairs, then a Hadamard splitter between each qubit-side
    mode and its ancilla partner.
    """
    n = len(QUBIT1_RAILS + QUBIT2_RAILS + ANCILLA_MODES)
    h = reference_four_splitter()[:2, :2] * constants.SQRT2
    first = _embed(n, list(QUBIT1_RAILS + QUBIT2_RAILS), reference_four_splitter())
    for pair in ((ANCILLA_MODES[0], ANCILLA_MODES[1]), (ANCILLA_MODES[2], ANCILLA_MODES[3])):
        first = _embed(n, list(pair), h) @ first
    second = np.eye(n, dtype=complex)
    for pair in BOOSTED_STAGES[3]:
        second = _embed(n, list(pair), h) @ second
    return second @ first
