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

import numpy as np

from greenmachine.exceptions import SimulationError
from greenmachine.hwsim.hardware_config import HardwareConfig
from greenmachine.mzi.transfer import lossy_blocks
from greenmachine.noise.inject import draw_errors
from greenmachine.noise.noise_model import NoiseModel
from greenmachine.scheduler.schedule import Round, Schedule, SwitchState
from greenmachine.utils import error_messages as ErrorMessages
from greenmachine.utils import constants, helper

logger = logging.getLogger(__name__)

IDENTITY_SETTING = (np.pi, np.pi)


def _mzi_events(rnd: Round):
    """
    Slots where light reaches the MZI, with the programmed or identity setting.
    A lone bin crosses the MZI in its identity setting; whatever a noisy
    identity leaks into the top port meets switch2 with no bin scheduled to
    take it and is lost.
    """
    leading = set(rnd.leading_bins())
    events = []
    for t in range(rnd.n_slots):
        setting = rnd.mzi_settings[t]
        if setting is not None:
            events.append((t, setting))
        elif t not in leading:
            events.append((t, IDENTITY_SETTING))
    return events


def _round_loss(hw: HardwareConfig, n, d):
    """Amplitude factor shared by every bin: two switch passes, one inner delay, the outer loop."""
    db = (constants.SWITCH_PASSES_PER_ROUND * hw.switch_loss
          + hw.eta_i * hw.fiber_length(d) + hw.eta_o * hw.fiber_length(n))
    return float(helper.db_to_amplitude(db))


def _run_round(frame, rnd: Round, blocks, loss):
    """
    Step one round slot by slot. frame[k] holds the amplitudes of bin k
    (one column per input mode); the returned frame is in the same order.
    """
    n, d = rnd.n_slots, rnd.delay_length
    width = frame.shape[1]
    inner = {}
    top_out = {}
    bottom_out = {}
    k = 0
    for t in range(n):
        bottom = None
        if rnd.switch1_states[t] == SwitchState.cross:
            inner[t + d] = frame[t]
        else:
            bottom = frame[t]
        top = inner.pop(t, None)
        if top is None and bottom is None:
            continue
        setting = rnd.mzi_settings[t]
        if (top is None) != (setting is None) or bottom is None:
            raise SimulationError(ErrorMessages.EMPTY_SLOT, 'mzi slot', t)
        block = blocks[k]
        k += 1
        top = np.zeros(width, dtype=complex) if top is None else top
        top_out[t] = block[0, 0] * top + block[0, 1] * bottom
        bottom_out[t] = block[1, 0] * top + block[1, 1] * bottom
    if inner:
        raise SimulationError(ErrorMessages.EMPTY_SLOT, 'delayed bins never met the MZI', sorted(inner))

    out = np.empty_like(frame)
    for b in range(n):
        state = rnd.switch2_states[b]
        if state == SwitchState.drop:
            state = SwitchState.bar if rnd.switch1_states[b] == SwitchState.cross else SwitchState.cross
        # output time b + d: the top port now, or the bottom port from d slots ago
        source = top_out.get(b + d) if state == SwitchState.bar else bottom_out.get(b)
        if source is None:
            raise SimulationError(ErrorMessages.EMPTY_SLOT, 'output bin', b)
        out[b] = loss * source
    return out


def simulate(s: Schedule, hw: HardwareConfig, noise: NoiseModel = None, instance=0):
    """
    Slot-stepped propagation of every time bin through the compiled rounds.
    :param s: compiled schedule
    :param hw: hardware; its static MZI imperfections apply on every pass
    :param noise: optional splitter-error model, drawn once per MZI firing
    :param instance: circuit instance index for the noise streams
    :return: n x n transfer matrix over time-bin modes; its columns have norm
        at most 1, and below 1 when noise or loss is present
    """
    n = s.n_modes
    events = [_mzi_events(r) for r in s.rounds]
    total = sum(len(e) for e in events)
    if noise is not None:
        alpha, beta = draw_errors(noise, total, instance)
    else:
        alpha = beta = np.zeros(total)
    settings = np.array([setting for e in events for _, setting in e], dtype=float).reshape(-1, 2)
    blocks = lossy_blocks(settings[:, 0], settings[:, 1], hw.mzi.alpha + alpha, hw.mzi.beta + beta,
                          hw.mzi.gamma1, hw.mzi.gamma2)
    blocks = blocks * helper.db_to_amplitude(hw.eta_bs)

    frame = np.eye(n, dtype=complex)
    start = 0
    for rnd, e in zip(s.rounds, events):
        if rnd.n_slots != n:
            raise SimulationError(ErrorMessages.SCHEDULE_MODES)
        if rnd.delay_length not in hw.delay_set:
            raise SimulationError(ErrorMessages.MISSING_DELAY, '{} tau'.format(rnd.delay_length))
        frame = _run_round(frame, rnd, blocks[start:start + len(e)], _round_loss(hw, n, rnd.delay_length))
        start += len(e)
    if s.output_phases:
        frame = np.exp(1j * np.asarray(s.output_phases, dtype=float))[:, None] * frame
    logger.debug('simulated %d rounds over %d bins with %d MZI firings', s.n_rounds, n, total)
    return frame
