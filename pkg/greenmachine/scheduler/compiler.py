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


import logging
from dataclasses import dataclass

from greenmachine.exceptions import CompileError
from greenmachine.hwsim.hardware_config import HardwareConfig
from greenmachine.mesh.mesh_program import MeshProgram
from greenmachine.scheduler.schedule import Round, Schedule, SwitchState
from greenmachine.utils import error_messages as ErrorMessages

logger = logging.getLogger(__name__)


def _layer_distance(layer, hw):
    distances = {c.distance for c in layer}
    if len(distances) > 1:
        raise CompileError(ErrorMessages.MIXED_DISTANCE_LAYER, sorted(distances))
    if not distances:
        return min(hw.delay_set)
    d = distances.pop()
    if d not in hw.delay_set:
        raise CompileError(ErrorMessages.MISSING_DELAY, '{} tau'.format(d))
    return d


def compile_round(layer, n, hw: HardwareConfig, final=False):
    """
    Lower one layer of equal-distance couplings (i, i + d): bin i is sent
    into the delay d so it meets bin i + d at the MZI in slot i + d.
    """
    d = _layer_distance(layer, hw)
    switch1 = [SwitchState.bar] * n
    mzi = [None] * n
    for c in layer:
        switch1[c.i] = SwitchState.cross
        mzi[c.j] = (c.theta, c.phi)
    if final:
        switch2 = [SwitchState.drop] * n
    else:
        # leading bins leave on the top output at once; the rest wait d slots
        switch2 = [SwitchState.bar if s == SwitchState.cross else SwitchState.cross for s in switch1]
    return Round(d, tuple(switch1), tuple(switch2), tuple(mzi))


def compile_schedule(m: MeshProgram, hw: HardwareConfig):
    """
    One round per mesh layer; the last round drops the frame to the detectors.
    :raises CompileError: a layer mixes distances, or needs a delay the hardware lacks
    """
    rounds = []
    for k, layer in enumerate(m.layers):
        rounds.append(compile_round(layer, m.n_modes, hw, final=k == m.n_layers - 1))
    s = Schedule(m.n_modes, tuple(rounds), drop_round=len(rounds), output_phases=m.output_phases)
    logger.info('compiled %d-mode %s mesh into %d rounds, delays %s',
                m.n_modes, m.topology.value, s.n_rounds, s.delay_lengths())
    return s


@dataclass(frozen=True)
class ScheduleStats:
    total_time: float
    mzi_passes: int
    outer_loop_passes: int


def schedule_stats(s: Schedule, hw: HardwareConfig):
    """Each round streams the frame once and adds its delay as latency."""
    slots = sum(s.n_modes + r.delay_length for r in s.rounds)
    return ScheduleStats(total_time=slots * hw.tau, mzi_passes=s.n_modes * s.n_rounds,
                         outer_loop_passes=s.n_rounds)
