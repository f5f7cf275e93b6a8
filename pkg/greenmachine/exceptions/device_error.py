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


from greenmachine.exceptions.exception import GreenMachineError


class DegenerateDeviceError(GreenMachineError):
    """Raised when an MZI transmits nothing on either arm."""

    pass


class InfeasibleError(GreenMachineError):
    """Raised when a requested figure of merit cannot be reached."""

    pass


class InvalidArchitectureError(GreenMachineError):
    """Raised for an unknown architecture name."""

    pass
