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


from dataclasses import dataclass, field
from typing import Dict

from greenmachine.hwsim.hardware_config import HardwareConfig
from greenmachine.scheduler.schedule import Schedule
from greenmachine.utils import constants


@dataclass(frozen=True)
class LossBudget:
    total_db: float
    breakdown: Dict[str, float] = field(default_factory=dict)

    def to_dict(self):
        return {'total_db': self.total_db, 'breakdown': dict(self.breakdown)}


def loss_budget(s: Schedule, hw: HardwareConfig):
    """Loss seen by one photon: every bin takes one MZI pass, one inner delay and one outer loop per round."""
    rounds = s.n_rounds
    breakdown = {
        'mzi': rounds * hw.eta_bs,
        'inner_delay': hw.eta_i * sum(hw.fiber_length(r.delay_length) for r in s.rounds),
        'outer_loop': hw.eta_o * rounds * hw.fiber_length(s.n_modes),
        'switch': constants.SWITCH_PASSES_PER_ROUND * rounds * hw.switch_loss,
    }
    return LossBudget(total_db=float(sum(breakdown.values())), breakdown=breakdown)
