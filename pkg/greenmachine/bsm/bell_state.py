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


from enum import Enum

from greenmachine.utils import constants


class BellState(Enum):
    """
    Two-qubit Bell states over dual-rail qubits, in decoder index order.
    Rail 0 of a qubit carries |0>, rail 1 carries |1>.
    """

    PsiPlus = 'PsiPlus'
    PsiMinus = 'PsiMinus'
    PhiPlus = 'PhiPlus'
    PhiMinus = 'PhiMinus'

    @property
    def index(self):
        return BELL_STATES.index(self)

    def components(self):
        """{(bit of qubit 1, bit of qubit 2): amplitude}"""
        amp = 1.0 / constants.SQRT2
        if self is BellState.PsiPlus:
            return {(0, 1): amp, (1, 0): amp}
        if self is BellState.PsiMinus:
            return {(0, 1): amp, (1, 0): -amp}
        if self is BellState.PhiPlus:
            return {(0, 0): amp, (1, 1): amp}
        return {(0, 0): amp, (1, 1): -amp}


BELL_STATES = tuple(BellState)

# every product term that appears in some Bell state
QUBIT_BITS = ((0, 0), (0, 1), (1, 0), (1, 1))
