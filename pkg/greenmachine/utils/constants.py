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

PERCOLATION_THRESHOLD = 0.672
BOOSTED_BSM_SUCCESS = 0.75
STANDARD_BSM_SUCCESS = 0.5
BSM_PHOTONS = 6
DEFAULT_DECISION_THRESHOLD = 0.9
THRESHOLD_SWEEP_START = 0.26
THRESHOLD_SWEEP_STOP = 1.0
THRESHOLD_SWEEP_STEP = 0.02

# 8-mode expressive SCF distances; pruning activates positions in this order
SCF8_PRUNING_ORDER = (0, 1, 3, 2, 4, 5, 6)
MIN_PRUNED_DEPTH = 3
MAX_PRUNED_DEPTH = 7

DEFAULT_LIGHT_SPEED = 2e8
DEFAULT_TAU = 100e-12
SWITCH_PASSES_PER_ROUND = 2

MAX_PERMANENT_SIZE = 8
MAX_FOCK_DIMENSION = 10 ** 6
MAX_FOCK_PHOTONS = 6
MAX_TRANSPORT_PHOTONS = 2
MAX_MATRIX_FILE_SIZE = 4096

UNITARY_TOL = 1e-10
NORMALIZATION_TOL = 1e-6
FIT_TOL = 1e-9
FIT_RESTARTS = 8
FIT_RESTART_GROWTH = 4
FIT_KICK = 0.5

SQRT2 = math.sqrt(2.0)
CORRECTED_ERROR_SCALING = 'O(sqrt(N log2 N) sigma^2)'

# rng stream keys
STREAM_HAAR = 1
STREAM_NOISE = 2
STREAM_JITTER = 3
STREAM_STATE = 4
STREAM_MODES = 5
STREAM_FIT = 6

CSV = 'csv'
JSON = 'json'
MANIFEST_NAME = 'manifest.json'
