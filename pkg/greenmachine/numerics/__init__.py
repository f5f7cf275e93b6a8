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


from greenmachine.numerics.matrix import haar_random_unitary, random_state, basis_state, is_unitary, \
    check_unitary, state_infidelity, matrix_error, distance_up_to_global_phase
from greenmachine.numerics.matrix_file import MatrixFile, load_matrix, save_matrix
from greenmachine.numerics.stats import Quantiles
