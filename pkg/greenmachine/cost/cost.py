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
import math
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Dict

from greenmachine.exceptions import DimensionError, InvalidArchitectureError, InvalidInputError
from greenmachine.hwsim.hardware_config import HardwareConfig
from greenmachine.utils import error_messages as ErrorMessages
from greenmachine.utils import constants, helper

logger = logging.getLogger(__name__)

# two switches and one MZI around the delay lines
LOOP_CORE_COMPONENTS = 3


class Architecture(Enum):
    ggm_clements = 'ggm_clements'
    ggm_scf = 'ggm_scf'
    clements_spatial = 'clements_spatial'
    motes_loops = 'motes_loops'
    bouchard_cascade = 'bouchard_cascade'


@dataclass(frozen=True)
class CostReport:
    """
    Resource figures for an N-mode transform. Loss is per photon in dB,
    compile time is the latency to program one arbitrary unitary.
    """

    architecture: Architecture
    n_modes: int
    hardware_count: int
    delay_count: int
    round_trips: int
    throughput_density: float
    compile_time: float
    loss_db: float
    loss_breakdown: Dict[str, float] = field(default_factory=dict)

    def to_dict(self):
        out = asdict(self)
        out['architecture'] = self.architecture.value
        return out


def _architecture(arch):
    try:
        return Architecture(arch.value if isinstance(arch, Architecture) else arch)
    except ValueError:
        raise InvalidArchitectureError(ErrorMessages.UNKNOWN_ARCHITECTURE, str(arch))


def _loop_loss(hw: HardwareConfig, n, rounds, inner_slots):
    breakdown = {
        'mzi': rounds * hw.eta_bs,
        'inner_delay': hw.eta_i * hw.fiber_length(inner_slots),
        'outer_loop': hw.eta_o * rounds * hw.fiber_length(n),
        'switch': constants.SWITCH_PASSES_PER_ROUND * rounds * hw.switch_loss,
    }
    return breakdown


def _ggm_clements(n, hw):
    loss = _loop_loss(hw, n, n, n)
    return dict(hardware_count=LOOP_CORE_COMPONENTS + 1, delay_count=1, round_trips=n,
                throughput_density=float(n), compile_time=n * n * hw.tau, loss_breakdown=loss)


def _ggm_scf(n, hw):
    if not helper.is_power_of_two(n):
        raise DimensionError(ErrorMessages.NOT_POWER_OF_TWO, str(n))
    delays = int(math.log2(n))
    rounds = n - 1
    # inner slots summed over the expressive order: S(N) = 2 S(N/2) + 1 at unit spacing
    inner_slots = (n * n - 1) // 3
    loss = _loop_loss(hw, n, rounds, inner_slots)
    return dict(hardware_count=LOOP_CORE_COMPONENTS + delays, delay_count=delays, round_trips=rounds,
                throughput_density=n / float(delays), compile_time=rounds * n * hw.tau, loss_breakdown=loss)


def _clements_spatial(n, hw):
    return dict(hardware_count=n * (n - 1) // 2, delay_count=0, round_trips=1, throughput_density=1.0,
                compile_time=n * hw.tau, loss_breakdown={'mzi': n * hw.eta_bs})


def _motes_loops(n, hw):
    """Nested short and long loops; half the throughput of the Clements-configured loop."""
    report = _ggm_clements(n, hw)
    report.update(delay_count=2, hardware_count=LOOP_CORE_COMPONENTS + 2,
                  throughput_density=n / 2.0)
    return report


def _bouchard_cascade(n, hw):
    loss = {'mzi': n * hw.eta_bs, 'inner_delay': n * hw.eta_i * hw.fiber_length(1)}
    return dict(hardware_count=n, delay_count=0, round_trips=1, throughput_density=float(n),
                compile_time=n * hw.tau, loss_breakdown=loss)


_MODELS = {
    Architecture.ggm_clements: _ggm_clements,
    Architecture.ggm_scf: _ggm_scf,
    Architecture.clements_spatial: _clements_spatial,
    Architecture.motes_loops: _motes_loops,
    Architecture.bouchard_cascade: _bouchard_cascade,
}


def architecture_cost(arch, n, hw: HardwareConfig = None):
    """
    Closed-form cost row of one architecture.
    :param arch: Architecture or its name
    :param n: number of modes, at least 2
    :param hw: losses, bin spacing and fiber speed; defaults to HardwareConfig()
    """
    arch = _architecture(arch)
    if n < 2:
        raise DimensionError(ErrorMessages.TOO_FEW_MODES)
    hw = HardwareConfig() if hw is None else hw
    fields = _MODELS[arch](n, hw)
    breakdown = {k: float(v) for k, v in fields.pop('loss_breakdown').items()}
    report = CostReport(architecture=arch, n_modes=n, loss_db=float(sum(breakdown.values())),
                        loss_breakdown=breakdown, **fields)
    logger.debug('%s n=%d: %s', arch.value, n, report)
    return report


@dataclass(frozen=True)
class MacRateQuery:
    """M stacked N-bin stages running M x M x N tensor operations at bin spacing tau."""

    n_modes: int
    tau: float
    multiplex: int = 1

    def __post_init__(self):
        if self.tau <= 0:
            raise InvalidInputError(ErrorMessages.NONPOSITIVE_TAU, str(self.tau))
        if self.multiplex < 1 or self.n_modes < 1:
            raise InvalidInputError(ErrorMessages.INVALID_MULTIPLEX, str((self.n_modes, self.multiplex)))


def mac_rate(q: MacRateQuery):
    """M^2 N^2 MACs per N^2 tau compile window, i.e. M^2 / tau."""
    total_macs = (q.multiplex * q.n_modes) ** 2
    return total_macs / (q.n_modes ** 2 * q.tau)


def mac_rate_sweep(taus, n, multiplex):
    """Single-stage and multiplexed rates over a list of bin spacings."""
    rows = []
    for tau in taus:
        rows.append({'tau': float(tau),
                     'single_stage': mac_rate(MacRateQuery(n, tau)),
                     'multiplexed': mac_rate(MacRateQuery(n, tau, multiplex))})
    return rows
