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


from greenmachine.bsm.bell_state import BellState, BELL_STATES
from greenmachine.bsm.circuit import BsmCircuit, build_bsm_circuit, build_standard_bsm_circuit, \
    reference_four_splitter, reference_bsm_unitary
from greenmachine.bsm.decode import DecodeResult, PosteriorTable, detection_distribution, detection_distributions, \
    bayesian_decode
from greenmachine.bsm.benchmark import BsmSample, BsmResult, benchmark, threshold_sweep, threshold_grid, \
    depth_sweep, loss_threshold, lossy_success_rate
