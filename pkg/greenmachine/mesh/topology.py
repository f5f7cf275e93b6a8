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


import math

from greenmachine.exceptions import DimensionError, InvalidDepthError
from greenmachine.mesh.mesh_program import Coupling, MeshProgram, TopologyType
from greenmachine.utils import error_messages as ErrorMessages
from greenmachine.utils import constants, helper

IDENTITY_THETA = math.pi
IDENTITY_PHI = math.pi


def identity_coupling(i, j):
    """T(pi, pi) is exactly the 2x2 identity."""
    return Coupling(i, j, IDENTITY_THETA, IDENTITY_PHI)


def nearest_neighbor_layer(n, parity):
    return tuple(Coupling(i, i + 1) for i in range(parity, n - 1, 2))


def distance_layer(n, d):
    """Pairs (i, i + d) for every i with i mod 2d < d."""
    return tuple(Coupling(i, i + d) for i in range(n) if i % (2 * d) < d and i + d < n)


def clements_topology(n):
    """n alternating even/odd nearest-neighbour layers; empty layers are dropped."""
    if n < 2:
        raise DimensionError(ErrorMessages.TOO_FEW_MODES)
    layers = [nearest_neighbor_layer(n, k % 2) for k in range(n)]
    layers = [layer for layer in layers if layer]
    return MeshProgram(n, tuple(layers), topology=TopologyType.clements)


def minimal_scf_distances(n):
    return [n >> (k + 1) for k in range(int(math.log2(n)))]


def expressive_scf_distances(n):
    """
    Recursive sine-cosine fractal order: the half-size order on both
    halves, one distance-1 layer, then the half-size order again.
    For n = 8 this is [4, 2, 4, 1, 4, 2, 4].
    """
    distances = minimal_scf_distances(n)

    def build(ds):
        if len(ds) == 1:
            return list(ds)
        inner = build(ds[:-1])
        return inner + [ds[-1]] + inner

    return build(distances)


def scf_topology(n, variant='expressive'):
    """
    :param n: number of modes, a power of two
    :param variant: 'expressive' (n - 1 layers) or 'minimal' (log2 n layers)
    """
    if n < 2:
        raise DimensionError(ErrorMessages.TOO_FEW_MODES)
    if not helper.is_power_of_two(n):
        raise DimensionError(ErrorMessages.NOT_POWER_OF_TWO, str(n))
    if variant == 'minimal':
        distances = minimal_scf_distances(n)
    elif variant == 'expressive':
        distances = expressive_scf_distances(n)
    else:
        raise DimensionError(ErrorMessages.UNKNOWN_TOPOLOGY, str(variant))
    layers = tuple(distance_layer(n, d) for d in distances)
    return MeshProgram(n, layers, topology=TopologyType.scf)


def pruned_positions(depth):
    if not constants.MIN_PRUNED_DEPTH <= depth <= constants.MAX_PRUNED_DEPTH:
        raise InvalidDepthError(ErrorMessages.DEPTH_OUT_OF_RANGE, str(depth))
    return sorted(constants.SCF8_PRUNING_ORDER[:depth])


def prune_to_depth(depth, n=8):
    """
    Pruned 8-mode SCF with `depth` active stages. Depth 3 is the minimal
    [4, 2, 1] mesh; each extra stage switches on the next layer of the
    expressive order, so program(d) is contained in program(d + 1).
    """
    if n != 8:
        raise DimensionError(ErrorMessages.PRUNING_MODES, str(n))
    positions = pruned_positions(depth)
    full = expressive_scf_distances(n)
    layers = tuple(distance_layer(n, full[p]) for p in positions)
    return MeshProgram(n, layers, topology=TopologyType.pruned, depth=depth)


def build_topology(name, n):
    """Topology by name: clements, scf, scf-minimal, or pruned-<depth>."""
    if name == 'clements':
        return clements_topology(n)
    if name == 'scf':
        return scf_topology(n)
    if name == 'scf-minimal':
        return scf_topology(n, 'minimal')
    if name.startswith('pruned-'):
        return prune_to_depth(int(name.split('-', 1)[1]), n)
    raise DimensionError(ErrorMessages.UNKNOWN_TOPOLOGY, name)
