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
from dataclasses import dataclass

from greenmachine.exceptions import InvalidInputError
from greenmachine.utils import error_messages as ErrorMessages


@dataclass(frozen=True)
class MZIParams:
    """
    Settings and imperfections of one Mach-Zehnder interferometer.
    alpha and beta are the first and second splitter errors; gamma1 and
    gamma2 are amplitude transmissions of the two internal arms.
    """

    theta: float = 0.0
    phi: float = 0.0
    alpha: float = 0.0
    beta: float = 0.0
    gamma1: float = 1.0
    gamma2: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.theta) and math.isfinite(self.phi)):
            raise InvalidInputError(ErrorMessages.NONFINITE_SETTING)
        for g in (self.gamma1, self.gamma2):
            if not 0.0 <= g <= 1.0:
                raise InvalidInputError(ErrorMessages.ARM_TRANSMISSION_RANGE, g)

    @property
    def is_ideal(self):
        return self.alpha == 0 and self.beta == 0 and self.gamma1 == 1 and self.gamma2 == 1


@dataclass(frozen=True)
class SplittingBounds:
    """Admissible range of |s| = |T11 / T12|; upper may be inf."""

    lower: float
    upper: float

    def contains(self, s, rel=1e-6):
        return self.lower * (1 - rel) <= s <= self.upper * (1 + rel)
