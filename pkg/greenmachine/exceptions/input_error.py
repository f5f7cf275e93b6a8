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


class InvalidInputError(GreenMachineError):
    """Raised when an input is well shaped but violates a precondition."""

    pass


class InvalidPatternError(GreenMachineError):
    """Raised when input and output photon patterns disagree."""

    pass


class InvalidDistributionError(GreenMachineError):
    """Raised when a probability distribution is not normalized."""

    pass


class DegenerateInputError(GreenMachineError):
    """Raised when every conditional distribution is zero."""

    pass
