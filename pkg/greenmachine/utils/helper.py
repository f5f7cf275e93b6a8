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


import zlib

import numpy as np

from greenmachine.exceptions import DimensionError
from greenmachine.utils import error_messages as ErrorMessages


def rng_stream(seed, *key):
    """
    Independent generator for one (experiment, sample, element) key.
    :param seed: master seed (int), or an existing Generator which is returned as is
    :param key: nonnegative ints or strings naming the stream
    :return: numpy Generator
    """
    if isinstance(seed, np.random.Generator):
        return seed
    spawn_key = tuple(stream_id(k) for k in key)
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=spawn_key))


def stream_id(key):
    if isinstance(key, str):
        return zlib.crc32(key.encode('utf-8'))
    return int(key)


def db_to_amplitude(db):
    """Amplitude factor of a loss given in dB (10^(-dB/20))."""
    return 10.0 ** (-np.asarray(db, dtype=float) / 20.0)


def db_to_transmission(db):
    """Intensity factor of a loss given in dB (10^(-dB/10))."""
    return 10.0 ** (-np.asarray(db, dtype=float) / 10.0)


def is_power_of_two(n):
    return n >= 1 and (n & (n - 1)) == 0


def wrap_phase(phi):
    """Map phases onto [0, 2pi)."""
    return np.mod(phi, 2 * np.pi)


def as_matrix(m):
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2:
        raise DimensionError(ErrorMessages.NOT_SQUARE)
    if not np.all(np.isfinite(m)):
        raise DimensionError(ErrorMessages.NOT_FINITE)
    return m


def check_square(m):
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise DimensionError(ErrorMessages.NOT_SQUARE, str(m.shape))
    return m


def check_same_shape(a, b):
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise DimensionError(ErrorMessages.SHAPE_MISMATCH, str(a.shape), str(b.shape))
    return a, b


def quantiles(values):
    """(min, q25, median, q75, max, mean) of a sample."""
    v = np.asarray(values, dtype=float)
    q = np.quantile(v, [0.0, 0.25, 0.5, 0.75, 1.0])
    return tuple(float(x) for x in q) + (float(np.mean(v)),)
