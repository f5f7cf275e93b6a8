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


from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from greenmachine.exceptions import InvalidProgramError, DimensionError
from greenmachine.utils import error_messages as ErrorMessages


class TopologyType(Enum):
    """Connectivity family a mesh program was generated from."""

    clements = 'clements'
    scf = 'scf'
    pruned = 'pruned'
    custom = 'custom'


@dataclass(frozen=True)
class Coupling:
    """T_{i,j}(theta, phi) acting on modes i < j."""

    i: int
    j: int
    theta: float = 0.0
    phi: float = 0.0

    @property
    def distance(self):
        return self.j - self.i


@dataclass(frozen=True)
class MeshProgram:
    """
    Layered list of pairwise couplings plus an output phase screen.
    Layers apply in listed order, earliest first; couplings inside a
    layer act on disjoint modes and therefore commute.
    """

    n_modes: int
    layers: Tuple[Tuple[Coupling, ...], ...]
    output_phases: Tuple[float, ...] = ()
    topology: TopologyType = TopologyType.custom
    depth: Optional[int] = None
    _flat: tuple = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n_modes < 1:
            raise DimensionError(ErrorMessages.INVALID_DIMENSION)
        layers = tuple(tuple(layer) for layer in self.layers)
        object.__setattr__(self, 'layers', layers)
        phases = tuple(float(p) for p in self.output_phases) or (0.0,) * self.n_modes
        if len(phases) != self.n_modes:
            raise InvalidProgramError(ErrorMessages.PHASES_LENGTH)
        object.__setattr__(self, 'output_phases', phases)
        for layer in layers:
            used = set()
            for c in layer:
                if not 0 <= c.i < c.j < self.n_modes:
                    raise InvalidProgramError(ErrorMessages.COUPLING_OUT_OF_RANGE, str((c.i, c.j)))
                if c.i in used or c.j in used:
                    raise InvalidProgramError(ErrorMessages.OVERLAPPING_COUPLINGS, str((c.i, c.j)))
                used.update((c.i, c.j))
        object.__setattr__(self, '_flat', tuple(c for layer in layers for c in layer))

    @property
    def couplings(self):
        return self._flat

    @property
    def n_couplings(self):
        return len(self._flat)

    @property
    def n_layers(self):
        return len(self.layers)

    @property
    def thetas(self):
        return np.array([c.theta for c in self._flat], dtype=float)

    @property
    def phis(self):
        return np.array([c.phi for c in self._flat], dtype=float)

    def layer_distances(self):
        """Distinct pair distances of each layer, as sorted tuples."""
        return [tuple(sorted({c.distance for c in layer})) for layer in self.layers]

    def pair_structure(self):
        return [tuple((c.i, c.j) for c in layer) for layer in self.layers]

    def with_parameters(self, thetas=None, phis=None, output_phases=None):
        """Copy with new coupling settings, given flat in coupling order."""
        thetas = self.thetas if thetas is None else np.asarray(thetas, dtype=float)
        phis = self.phis if phis is None else np.asarray(phis, dtype=float)
        k = 0
        layers = []
        for layer in self.layers:
            new_layer = []
            for c in layer:
                new_layer.append(Coupling(c.i, c.j, float(thetas[k]), float(phis[k])))
                k += 1
            layers.append(tuple(new_layer))
        phases = self.output_phases if output_phases is None else tuple(float(p) for p in output_phases)
        return replace(self, layers=tuple(layers), output_phases=phases)

    def is_subprogram_of(self, other):
        """True if every layer of self appears, in order, among the layers of other."""
        mine = self.pair_structure()
        theirs = other.pair_structure()
        k = 0
        for layer in theirs:
            if k < len(mine) and set(layer) == set(mine[k]):
                k += 1
        return k == len(mine)
