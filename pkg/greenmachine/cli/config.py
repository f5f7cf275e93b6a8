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
from typing import Any, Dict, List, Optional

import pydantic
from pydantic import BaseModel, ConfigDict, Field, model_validator

from greenmachine.bsm.benchmark import GGM
from greenmachine.cost.cost import Architecture
from greenmachine.exceptions import ConfigError
from greenmachine.noise.noise_model import NoiseKind
from greenmachine.utils import constants, files
from greenmachine.utils import error_messages as ErrorMessages


class Experiment(Enum):
    compile = 'compile'
    simulate = 'simulate'
    scaling = 'scaling'
    bsm = 'bsm'
    transport = 'transport'
    cost = 'cost'


class OutputFormat(Enum):
    csv = constants.CSV
    json = constants.JSON


class _Parameters(BaseModel):
    model_config = ConfigDict(frozen=True, extra='forbid')


class CompileParameters(_Parameters):
    target: str
    topology: str = 'clements'
    hw: Optional[str] = None
    restarts: int = Field(default=constants.FIT_RESTARTS, ge=1)


class SimulateParameters(_Parameters):
    schedule: str
    hw: Optional[str] = None
    sigma: float = Field(default=0.0, ge=0)
    noise: NoiseKind = NoiseKind.correlated
    instance: int = Field(default=0, ge=0)


class ScalingParameters(_Parameters):
    n: List[int] = Field(default_factory=lambda: [16, 64], min_length=1)
    sigma: List[float] = Field(default_factory=lambda: [1e-3, 1e-2], min_length=1)
    kind: List[NoiseKind] = Field(default_factory=lambda: [NoiseKind.uncorrelated, NoiseKind.correlated],
                                  min_length=1)
    photons: List[int] = Field(default_factory=lambda: [1], min_length=1)
    samples: int = Field(default=100, ge=1)
    sigma_jitter: float = Field(default=0.0, ge=0)


class BsmSweep(Enum):
    threshold = 'threshold'
    depth = 'depth'


class BsmParameters(_Parameters):
    depth: int = constants.MIN_PRUNED_DEPTH
    sigma: float = Field(default=0.0, ge=0)
    threshold: float = constants.DEFAULT_DECISION_THRESHOLD
    samples: int = Field(default=1000, ge=1)
    architecture: str = GGM
    sweep: Optional[BsmSweep] = None
    thresholds: Optional[List[float]] = None
    depths: Optional[List[int]] = None


class TransportParameters(_Parameters):
    topology: str = 'scf'
    n: int = Field(default=8, ge=2)
    stages: Optional[int] = None
    input: Optional[List[int]] = None
    sigma: float = Field(default=0.0, ge=0)
    noise: NoiseKind = NoiseKind.correlated
    circuits: int = Field(default=1, ge=1)


class CostParameters(_Parameters):
    architectures: List[str] = Field(default_factory=lambda: [a.value for a in Architecture], min_length=1)
    n: List[int] = Field(default_factory=lambda: [16, 64, 256], min_length=1)
    hw: Optional[str] = None
    taus: List[float] = Field(default_factory=lambda: [1e-9, 1e-10, 1e-11, 4.3e-12], min_length=1)
    multiplex: int = 1


PARAMETERS = {
    Experiment.compile: CompileParameters,
    Experiment.simulate: SimulateParameters,
    Experiment.scaling: ScalingParameters,
    Experiment.bsm: BsmParameters,
    Experiment.transport: TransportParameters,
    Experiment.cost: CostParameters,
}


class ExperimentConfig(BaseModel):
    """
    One run of one experiment. `parameters` is validated against the
    experiment's own parameter model; unknown keys are rejected. A missing
    seed is drawn once by the runner and recorded in the manifest.
    """

    model_config = ConfigDict(frozen=True, extra='forbid')

    experiment: Experiment
    parameters: Dict[str, Any] = Field(default_factory=dict)
    seed: Optional[int] = Field(default=None, ge=0)
    output_path: str = 'results'
    format: OutputFormat = OutputFormat.csv
    threads: int = Field(default=1, ge=1)
    progress: bool = False

    @model_validator(mode='after')
    def check_parameters(self):
        try:
            PARAMETERS[self.experiment].model_validate(self.parameters)
        except pydantic.ValidationError as err:
            raise ValueError('parameters: ' + files.describe_validation_error(err))
        return self

    def typed_parameters(self):
        return PARAMETERS[self.experiment].model_validate(self.parameters)


def resolve_config(experiment, overrides=None, parameters=None, path=None):
    """
    Merge a config file with command-line values. Explicit values win over
    the file, which wins over the model defaults; None means "not given".
    :raises ConfigError: unreadable file, experiment mismatch or failed validation
    """
    data = files.read_json(path) if path is not None else {}
    if not isinstance(data, dict):
        raise ConfigError(ErrorMessages.INVALID_CONFIG, str(path), 'top level must be an object')
    data = dict(data)
    if data.get('experiment', experiment) != experiment:
        raise ConfigError(ErrorMessages.INVALID_CONFIG, str(path),
                          'experiment {!r} does not match command {!r}'.format(data['experiment'], experiment))
    data['experiment'] = experiment
    merged = dict(data.get('parameters') or {})
    merged.update({k: v for k, v in (parameters or {}).items() if v is not None})
    data['parameters'] = merged
    data.update({k: v for k, v in (overrides or {}).items() if v is not None})
    try:
        return ExperimentConfig.model_validate(data)
    except pydantic.ValidationError as err:
        raise ConfigError(ErrorMessages.INVALID_CONFIG, files.describe_validation_error(err))
