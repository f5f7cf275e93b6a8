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
from typing import List

from pydantic import BaseModel, ConfigDict, Field, field_validator

from greenmachine.exceptions import DimensionError
from greenmachine.mzi.mzi_params import MZIParams
from greenmachine.utils import error_messages as ErrorMessages
from greenmachine.utils import constants, helper


class MZIDefaults(BaseModel):
    """Static imperfections of the single physical MZI, applied on every pass."""

    model_config = ConfigDict(frozen=True)

    alpha: float = 0.0
    beta: float = 0.0
    gamma1: float = Field(default=1.0, ge=0.0, le=1.0)
    gamma2: float = Field(default=1.0, ge=0.0, le=1.0)

    def params(self, theta=math.pi, phi=math.pi):
        return MZIParams(theta, phi, self.alpha, self.beta, self.gamma1, self.gamma2)


class HardwareConfig(BaseModel):
    """
    Time-bin hardware: bin spacing tau (s), available inner delay lengths
    in units of tau, MZI insertion loss eta_bs (dB per pass), inner and
    outer fiber loss eta_i, eta_o (dB/m), and switch loss (dB per pass).
    """

    model_config = ConfigDict(frozen=True)

    tau: float = Field(default=constants.DEFAULT_TAU, gt=0)
    delay_set: List[int] = Field(default_factory=lambda: [1], min_length=1)
    eta_bs: float = Field(default=0.0, ge=0)
    eta_i: float = Field(default=0.0, ge=0)
    eta_o: float = Field(default=0.0, ge=0)
    light_speed: float = Field(default=constants.DEFAULT_LIGHT_SPEED, gt=0)
    mzi: MZIDefaults = MZIDefaults()
    switch_loss: float = Field(default=0.0, ge=0)

    @field_validator('delay_set')
    @classmethod
    def positive_delays(cls, value):
        if any(d < 1 for d in value):
            raise ValueError('delay lengths must be positive multiples of tau')
        return sorted(set(value))

    @classmethod
    def for_clements(cls, **kwargs):
        """Single delay line of length tau."""
        return cls(delay_set=[1], **kwargs)

    @classmethod
    def for_scf(cls, n, **kwargs):
        """Delays 2^k tau for 0 <= k < log2 n."""
        if not helper.is_power_of_two(n) or n < 2:
            raise DimensionError(ErrorMessages.NOT_POWER_OF_TWO, n)
        return cls(delay_set=[2 ** k for k in range(int(math.log2(n)))], **kwargs)

    def fiber_length(self, slots):
        """Metres of fiber that delay light by `slots` bins."""
        return slots * self.tau * self.light_speed
