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


INVALID_DIMENSION = 'Dimension must be at least 1.'
NOT_SQUARE = 'Matrix must be square.'
SHAPE_MISMATCH = 'Matrix shapes do not match.'
NOT_FINITE = 'Matrix entries must be finite.'
NOT_NORMALIZED = 'State vector must be normalized.'
NOT_UNITARY = 'Matrix is not unitary.'
NOT_POWER_OF_TWO = 'SCF topology needs a power-of-two number of modes.'
TOO_FEW_MODES = 'A mesh needs at least two modes.'
OVERLAPPING_COUPLINGS = 'Couplings inside a layer must act on disjoint modes.'
COUPLING_OUT_OF_RANGE = 'Coupling modes must satisfy 0 <= i < j < n_modes.'
PHASES_LENGTH = 'Output phases must have one entry per mode.'
UNKNOWN_TOPOLOGY = 'Unknown topology.'
DEPTH_OUT_OF_RANGE = 'Pruned depth must be between 3 and 7.'
PRUNING_MODES = 'Pruning is defined for 8 modes only.'
MIXED_DISTANCE_LAYER = 'All couplings of a layer must share one distance.'
MISSING_DELAY = 'Hardware has no delay line of length'
SCHEDULE_MODES = 'Schedule and hardware disagree on the number of modes.'
SLOT_COUNT = 'Round slot program must cover every time bin exactly once.'
EMPTY_SLOT = 'Switch selects a slot that carries no signal:'
DEGENERATE_DEVICE = 'Arm transmissions cannot both be zero.'
PERMANENT_TOO_LARGE = 'Permanent size exceeds the desk-scale limit of'
FOCK_TOO_LARGE = 'Fock space dimension exceeds'
PHOTON_MISMATCH = 'Input and output patterns carry different photon numbers.'
PATTERN_LENGTH = 'Pattern length must equal the number of modes.'
NEGATIVE_COUNT = 'Photon counts must be nonnegative.'
TOO_MANY_TRANSPORT_PHOTONS = 'Transport runs support at most two photons.'
NOT_A_DISTRIBUTION = 'Probabilities must be nonnegative and sum to 1.'
ALL_ZERO_DISTRIBUTIONS = 'Every Bell-state distribution is zero.'
THRESHOLD_RANGE = 'Decision threshold must lie in (0.25, 1].'
TARGET_TOO_HIGH = 'Target success exceeds the boosted limit of 0.75.'
TARGET_NOT_POSITIVE = 'Target success must be positive.'
UNKNOWN_ARCHITECTURE = 'Unknown architecture:'
INVALID_CONFIG = 'Invalid configuration:'
INVALID_FILE = 'Invalid data file:'
UNKNOWN_NOISE_PREDICTION = 'No closed-form infidelity prediction for noise kind:'
BSM_MODES = 'Qubit rails and ancilla modes must cover every mode exactly once.'
TOO_FEW_SAMPLES = 'At least one sample is required, got'
TOO_FEW_STAGES = 'At least one stage is required, got'
NO_PHOTONS = 'Input must carry at least one photon.'
NONPOSITIVE_TAU = 'Bin spacing tau must be positive, got'
INVALID_MULTIPLEX = 'Mode count and multiplex factor must be at least 1:'
NONFINITE_SETTING = 'MZI settings theta and phi must be finite.'
ARM_TRANSMISSION_RANGE = 'Arm transmissions must lie in [0, 1], got'
NEGATIVE_SIGMA = 'Noise strengths sigma and sigma_jitter must be nonnegative, got'
