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


from typing import List, Optional

from pydantic import BaseModel, Field, model_validator

from greenmachine.exceptions import GreenMachineError
from greenmachine.mesh.mesh_program import Coupling, MeshProgram, TopologyType
from greenmachine.utils import files


class CouplingModel(BaseModel):
    i: int = Field(ge=0)
    j: int = Field(ge=1)
    theta: float = 0.0
    phi: float = 0.0


class MeshFile(BaseModel):
    """{"n": int, "topology": str, "layers": [[{"i", "j", "theta", "phi"}]], "output_phases": [...]}"""

    n: int = Field(ge=1)
    topology: TopologyType = TopologyType.custom
    depth: Optional[int] = None
    layers: List[List[CouplingModel]] = []
    output_phases: List[float] = []

    @model_validator(mode='after')
    def check_program(self):
        try:
            self.to_program()
        except GreenMachineError as err:
            raise ValueError(err.message)
        return self

    def to_program(self):
        layers = tuple(tuple(Coupling(c.i, c.j, c.theta, c.phi) for c in layer) for layer in self.layers)
        return MeshProgram(self.n, layers, tuple(self.output_phases), topology=self.topology, depth=self.depth)

    @classmethod
    def from_program(cls, m: MeshProgram):
        layers = [[CouplingModel(i=c.i, j=c.j, theta=c.theta, phi=c.phi) for c in layer] for layer in m.layers]
        return cls(n=m.n_modes, topology=m.topology, depth=m.depth, layers=layers,
                   output_phases=list(m.output_phases))


def load_mesh(path):
    return files.read_model(MeshFile, path).to_program()


def save_mesh(path, m: MeshProgram):
    return files.write_model(path, MeshFile.from_program(m))
