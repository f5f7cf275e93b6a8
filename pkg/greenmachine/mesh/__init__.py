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


from greenmachine.mesh.mesh_program import Coupling, MeshProgram, TopologyType
from greenmachine.mesh.topology import clements_topology, scf_topology, prune_to_depth, build_topology, \
    identity_coupling, distance_layer, expressive_scf_distances, minimal_scf_distances
from greenmachine.mesh.evaluate import mesh_to_unitary, blocks_to_unitary, propagate
from greenmachine.mesh.decompose import clements_decompose
from greenmachine.mesh.fit import FitResult, fit_mesh, mesh_cost, mesh_gradient
from greenmachine.mesh.mesh_file import MeshFile, load_mesh, save_mesh
