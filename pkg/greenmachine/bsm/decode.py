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
from typing import Dict, Mapping, Optional, Tuple

import numpy as np

from greenmachine.bsm.bell_state import BELL_STATES, QUBIT_BITS, BellState
from greenmachine.bsm.circuit import BsmCircuit
from greenmachine.exceptions import DegenerateInputError, InvalidDistributionError, InvalidInputError
from greenmachine.fock.fock import FockDistribution, evolve
from greenmachine.utils import error_messages as ErrorMessages
from greenmachine.utils import constants, helper

logger = logging.getLogger(__name__)

# patterns no Bell state can produce are left out of the decision
PATTERN_TOL = 1e-14
DECISION_TOL = 1e-12
DISCARD = -1


def _component_amplitudes(circuit: BsmCircuit, u):
    """Output amplitudes of every qubit product term, evolved once each."""
    out = {}
    for bits in QUBIT_BITS:
        out[bits] = evolve(u, circuit.input_pattern(bits))
    return out


def _combine(components, bell: BellState):
    first = next(iter(components.values()))
    amplitudes = sum(coeff * components[bits].amplitudes for bits, coeff in bell.components().items())
    return FockDistribution(first.n_modes, first.n_photons, first.patterns, amplitudes)


def detection_distributions(circuit: BsmCircuit, u=None):
    """
    Photon-number-resolved detection statistics of every Bell input.
    :param u: realized transfer matrix, defaults to the ideal circuit; a
        lossy matrix yields probabilities summing to the survival chance
    :return: {BellState: FockDistribution}
    """
    u = circuit.unitary() if u is None else helper.check_square(u)
    components = _component_amplitudes(circuit, u)
    return {bell: _combine(components, bell) for bell in BELL_STATES}


def detection_distribution(circuit: BsmCircuit, bell, u=None):
    u = circuit.unitary() if u is None else helper.check_square(u)
    return _combine(_component_amplitudes(circuit, u), BellState(bell))


@dataclass(frozen=True)
class DecodeResult:
    """
    Outcome of the posterior decision rule for one realized circuit.
    `decisions` holds the Bell index per kept pattern, or -1 for discard.
    """

    threshold: float
    success_rate: float
    error_given_heralded: float
    patterns: Tuple[Tuple[int, ...], ...]
    posteriors: np.ndarray
    decisions: np.ndarray

    def per_pattern(self) -> Dict[Tuple[int, ...], Tuple[float, ...]]:
        return {p: tuple(float(x) for x in self.posteriors[:, k]) for k, p in enumerate(self.patterns)}

    def decision(self, pattern) -> Optional[BellState]:
        k = self.patterns.index(tuple(pattern))
        label = int(self.decisions[k])
        return None if label == DISCARD else BELL_STATES[label]


class PosteriorTable:
    """
    Conditional pattern probabilities of the four Bell inputs and the
    posteriors under uniform priors. Built once, decided at any threshold.
    """

    def __init__(self, dists: Mapping[BellState, FockDistribution]):
        probs = []
        pattern_list = None
        for bell in BELL_STATES:
            dist = dists[bell]
            p = dist.probabilities() if isinstance(dist, FockDistribution) else np.asarray(dist, dtype=float)
            if np.any(p < -DECISION_TOL) or p.sum() > 1.0 + constants.NORMALIZATION_TOL:
                raise InvalidDistributionError(ErrorMessages.NOT_A_DISTRIBUTION, bell.value)
            probs.append(np.clip(p, 0.0, None))
            if isinstance(dist, FockDistribution):
                pattern_list = dist.patterns
        probs = np.array(probs)
        if not np.any(probs > 0):
            raise DegenerateInputError(ErrorMessages.ALL_ZERO_DISTRIBUTIONS)
        if pattern_list is None:
            pattern_list = tuple((k,) for k in range(probs.shape[1]))
        total = probs.sum(axis=0)
        keep = total > PATTERN_TOL
        self.patterns = tuple(p for p, k in zip(pattern_list, keep) if k)
        self.probabilities = probs[:, keep]
        self.posteriors = self.probabilities / total[keep]
        self.best = np.argmax(self.posteriors, axis=0)
        self.confidence = self.posteriors.max(axis=0)

    def decide(self, threshold) -> DecodeResult:
        if not 0.25 < threshold <= 1.0:
            raise InvalidInputError(ErrorMessages.THRESHOLD_RANGE, str(threshold))
        decoded = self.confidence >= threshold - DECISION_TOL
        heralded = self.probabilities[:, decoded]
        success = 0.25 * float(heralded.sum())
        labels = self.best[decoded]
        correct = 0.25 * float(sum(heralded[k, labels == k].sum() for k in range(len(BELL_STATES))))
        error = (success - correct) / success if success > 0 else float('nan')
        decisions = np.where(decoded, self.best, DISCARD)
        return DecodeResult(threshold=float(threshold), success_rate=success, error_given_heralded=error,
                            patterns=self.patterns, posteriors=self.posteriors, decisions=decisions)


def bayesian_decode(dists: Mapping[BellState, FockDistribution], threshold=constants.DEFAULT_DECISION_THRESHOLD):
    """
    Posterior decision rule with uniform priors: decode a pattern to the
    most probable Bell state when its posterior reaches `threshold`, else
    discard it. Ties go to the lowest Bell index.
    """
    result = PosteriorTable(dists).decide(threshold)
    logger.debug('threshold %.2f: success %.6f, error %.6f', threshold, result.success_rate,
                 result.error_given_heralded)
    return result
