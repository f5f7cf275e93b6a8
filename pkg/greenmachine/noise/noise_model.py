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


from dataclasses import dataclass
from enum import Enum
from typing import Optional

from greenmachine.exceptions import InvalidInputError
from greenmachine.utils import error_messages as ErrorMessages


class NoiseKind(Enum):
    """How static splitter errors are shared between couplings."""

    correlated = 'correlated'
    uncorrelated = 'uncorrelated'
    hybrid = 'hybrid'


@dataclass(frozen=True)
class NoiseModel:
    """
    Gaussian beamsplitter errors of RMS sigma. Correlated noise uses one
    (alpha, beta) pair for a whole circuit instance, the way a single
    physical MZI is reused for every time bin; hybrid adds per-coupling
    jitter of RMS sigma_jitter on top of the shared pair.
    """

    kind: NoiseKind = NoiseKind.correlated
    sigma: float = 0.0
    sigma_jitter: float = 0.0
    seed: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, 'kind', NoiseKind(self.kind))
        if self.sigma < 0 or self.sigma_jitter < 0:
            raise InvalidInputError(ErrorMessages.NEGATIVE_SIGMA, (self.sigma, self.sigma_jitter))

    @property
    def is_noiseless(self):
        return self.sigma == 0 and (self.kind != NoiseKind.hybrid or self.sigma_jitter == 0)
