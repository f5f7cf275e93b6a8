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


from dataclasses import asdict, dataclass

from greenmachine.utils import helper


@dataclass(frozen=True)
class Quantiles:
    """Five-number summary plus the mean."""

    min: float
    q25: float
    median: float
    q75: float
    max: float
    mean: float

    @classmethod
    def of(cls, values):
        return cls(*helper.quantiles(values))

    @property
    def iqr(self):
        return self.q75 - self.q25

    def to_dict(self):
        return asdict(self)
