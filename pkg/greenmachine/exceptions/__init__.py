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


from greenmachine.exceptions.exception import GreenMachineError, DimensionError
from greenmachine.exceptions.input_error import InvalidInputError, InvalidPatternError, \
    InvalidDistributionError, DegenerateInputError
from greenmachine.exceptions.program_error import InvalidProgramError, InvalidDepthError
from greenmachine.exceptions.compile_error import CompileError
from greenmachine.exceptions.simulation_error import SimulationError
from greenmachine.exceptions.size_limit_error import SizeLimitError
from greenmachine.exceptions.device_error import DegenerateDeviceError, InfeasibleError, \
    InvalidArchitectureError
from greenmachine.exceptions.config_error import ConfigError
