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
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Tuple

import numpy as np

from greenmachine.exceptions import InvalidPatternError, SizeLimitError
from greenmachine.fock.permanent import permanent, permanents
from greenmachine.utils import error_messages as ErrorMessages
from greenmachine.utils import constants, files, helper

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OccupationVector:
    """Photon count per mode."""

    counts: Tuple[int, ...]

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        if any(c < 0 for c in counts):
            raise InvalidPatternError(ErrorMessages.NEGATIVE_COUNT, str(counts))
        object.__setattr__(self, 'counts', counts)

    @classmethod
    def from_modes(cls, n_modes, modes):
        counts = [0] * n_modes
        for k in modes:
            counts[k] += 1
        return cls(tuple(counts))

    @property
    def n_modes(self):
        return len(self.counts)

    @property
    def n_photons(self):
        return sum(self.counts)

    def modes(self):
        """Mode index of every photon, with repetition, ascending."""
        return [k for k, c in enumerate(self.counts) for _ in range(c)]

    def factorial_norm(self):
        return math.prod(math.factorial(c) for c in self.counts)


def as_occupation(pattern):
    return pattern if isinstance(pattern, OccupationVector) else OccupationVector(tuple(pattern))


def fock_dimension(n_modes, n_photons):
    return math.comb(n_modes + n_photons - 1, n_photons)


def patterns(n_modes, n_photons):
    """Every occupation of n_photons over n_modes, colexicographic."""
    out = []
    for modes in combinations_with_replacement(range(n_modes), n_photons):
        counts = [0] * n_modes
        for k in modes:
            counts[k] += 1
        out.append(tuple(counts))
    out.sort(key=lambda c: c[::-1])
    return out


@dataclass(frozen=True)
class FockDistribution:
    """
    Output amplitudes over all patterns with a fixed photon number. For a
    lossy (sub-unitary) transfer matrix the total probability is the
    chance that every photon survives.
    """

    n_modes: int
    n_photons: int
    patterns: Tuple[Tuple[int, ...], ...]
    amplitudes: np.ndarray

    def probabilities(self):
        return np.abs(self.amplitudes) ** 2

    def total_probability(self):
        return float(np.sum(self.probabilities()))

    def as_dict(self):
        return dict(zip(self.patterns, self.amplitudes))

    def amplitude(self, pattern):
        pattern = tuple(as_occupation(pattern).counts)
        return self.as_dict().get(pattern, 0j)

    def probability(self, pattern):
        return float(abs(self.amplitude(pattern)) ** 2)

    def to_records(self):
        """JSON list of {"pattern", "re", "im", "prob"}."""
        return [{'pattern': list(p), 're': float(a.real), 'im': float(a.imag), 'prob': float(abs(a) ** 2)}
                for p, a in zip(self.patterns, self.amplitudes)]


def _check_patterns(u, inp, out=None):
    n = u.shape[0]
    if inp.n_modes != n or (out is not None and out.n_modes != n):
        raise InvalidPatternError(ErrorMessages.PATTERN_LENGTH)
    if out is not None and out.n_photons != inp.n_photons:
        raise InvalidPatternError(ErrorMessages.PHOTON_MISMATCH)


def output_amplitude(u, inp, out):
    """
    <out| U |inp> = Perm(U[out modes, in modes]) / sqrt(prod out! prod in!).
    """
    u = helper.check_square(u)
    inp = as_occupation(inp)
    out = as_occupation(out)
    _check_patterns(u, inp, out)
    sub = u[np.ix_(out.modes(), inp.modes())]
    return permanent(sub) / math.sqrt(out.factorial_norm() * inp.factorial_norm())


def evolve(u, inp):
    """
    Full output distribution of a Fock input under U.
    :param u: n x n transfer matrix, unitary or lossy
    :param inp: OccupationVector or count sequence
    :return: FockDistribution over all colex-ordered output patterns
    """
    u = helper.check_square(u)
    inp = as_occupation(inp)
    _check_patterns(u, inp)
    n, k = u.shape[0], inp.n_photons
    if k > constants.MAX_FOCK_PHOTONS:
        raise SizeLimitError(ErrorMessages.FOCK_TOO_LARGE, 'photon limit', constants.MAX_FOCK_PHOTONS)
    dim = fock_dimension(n, k)
    if dim > constants.MAX_FOCK_DIMENSION:
        raise SizeLimitError(ErrorMessages.FOCK_TOO_LARGE, constants.MAX_FOCK_DIMENSION, '(got {})'.format(dim))
    outs = patterns(n, k)
    rows = np.array([OccupationVector(p).modes() for p in outs], dtype=int).reshape(len(outs), k)
    cols = np.array(inp.modes(), dtype=int)
    subs = u[rows[:, :, None], cols[None, None, :]]
    norms = np.array([math.prod(math.factorial(c) for c in p) for p in outs], dtype=float)
    amplitudes = permanents(subs) / np.sqrt(norms * inp.factorial_norm())
    logger.debug('evolved %d photons over %d modes into %d patterns', k, n, dim)
    return FockDistribution(n, k, tuple(outs), amplitudes)


def fock_infidelity(u_ideal, u_actual, inp):
    """1 - |<inp| U(U_ideal^dag U_actual) |inp>|^2 for a Fock input."""
    u_ideal, u_actual = helper.check_same_shape(u_ideal, u_actual)
    w = u_ideal.conj().T @ u_actual
    return float(1.0 - abs(output_amplitude(w, inp, inp)) ** 2)


def classical_output_probability(u, inp, out):
    """Output probability for distinguishable photons: Perm(|U_sub|^2) / prod out!."""
    u = helper.check_square(u)
    inp = as_occupation(inp)
    out = as_occupation(out)
    _check_patterns(u, inp, out)
    sub = np.abs(u[np.ix_(out.modes(), inp.modes())]) ** 2
    return float(permanent(sub).real / out.factorial_norm())


def save_distribution(path, dist: FockDistribution):
    return files.write_json(path, dist.to_records())
