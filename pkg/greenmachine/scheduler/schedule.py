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
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field

from greenmachine.exceptions import CompileError, GreenMachineError
from greenmachine.utils import error_messages as ErrorMessages
from greenmachine.utils import files


class SwitchState(Enum):
    bar = 'bar'
    cross = 'cross'
    drop = 'drop'


@dataclass(frozen=True)
class Round:
    """
    One pass of the whole frame through the machine.
    switch1_states and mzi_settings are indexed by input slot, switch2_states
    by output bin. An mzi setting of None means no programmed coupling in
    that slot; a lone bin there crosses the MZI in its identity setting.
    """

    delay_length: int
    switch1_states: Tuple[SwitchState, ...]
    switch2_states: Tuple[SwitchState, ...]
    mzi_settings: Tuple[Optional[Tuple[float, float]], ...]

    def __post_init__(self):
        n = len(self.switch1_states)
        if len(self.switch2_states) != n or len(self.mzi_settings) != n:
            raise CompileError(ErrorMessages.SLOT_COUNT)

    @property
    def n_slots(self):
        return len(self.switch1_states)

    @property
    def is_drop(self):
        return all(s == SwitchState.drop for s in self.switch2_states)

    def leading_bins(self):
        return [k for k, s in enumerate(self.switch1_states) if s == SwitchState.cross]

    def firing_slots(self):
        return [t for t, setting in enumerate(self.mzi_settings) if setting is not None]


@dataclass(frozen=True)
class Schedule:
    n_modes: int
    rounds: Tuple[Round, ...]
    drop_round: int
    output_phases: Tuple[float, ...] = ()

    def __post_init__(self):
        if any(r.n_slots != self.n_modes for r in self.rounds):
            raise CompileError(ErrorMessages.SLOT_COUNT)

    @property
    def n_rounds(self):
        return len(self.rounds)

    def delay_lengths(self):
        return [r.delay_length for r in self.rounds]


class MZISetting(BaseModel):
    theta: float
    phi: float


class RoundModel(BaseModel):
    delay_length: int = Field(ge=1)
    switch1: List[SwitchState]
    switch2: List[SwitchState]
    mzi: List[Optional[MZISetting]]


class ScheduleFile(BaseModel):
    """Slot-by-slot schedule document."""

    n_modes: int = Field(ge=1)
    drop_round: int = Field(ge=0)
    output_phases: List[float] = []
    rounds: List[RoundModel] = []

    def to_schedule(self):
        rounds = tuple(Round(r.delay_length, tuple(r.switch1), tuple(r.switch2),
                             tuple(None if m is None else (m.theta, m.phi) for m in r.mzi))
                       for r in self.rounds)
        return Schedule(self.n_modes, rounds, self.drop_round, tuple(self.output_phases))

    @classmethod
    def from_schedule(cls, s: Schedule):
        rounds = [RoundModel(delay_length=r.delay_length, switch1=list(r.switch1_states),
                             switch2=list(r.switch2_states),
                             mzi=[None if m is None else MZISetting(theta=m[0], phi=m[1]) for m in r.mzi_settings])
                  for r in s.rounds]
        return cls(n_modes=s.n_modes, drop_round=s.drop_round, output_phases=list(s.output_phases), rounds=rounds)


def load_schedule(path):
    model = files.read_model(ScheduleFile, path)
    try:
        return model.to_schedule()
    except GreenMachineError as err:
        raise files.schema_error(path, err.message)


def save_schedule(path, s: Schedule):
    return files.write_model(path, ScheduleFile.from_schedule(s))
