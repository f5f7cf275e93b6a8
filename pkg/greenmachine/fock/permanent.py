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


import itertools

import numpy as np

from greenmachine.exceptions import SizeLimitError
from greenmachine.utils import error_messages as ErrorMessages
from greenmachine.utils import constants, helper

_CHUNK = 4096


def _subsets(n):
    """(2^n, n) 0/1 matrix of column subsets and the Ryser signs (-1)^(n - |S|)."""
    subsets = (np.arange(2 ** n)[:, None] >> np.arange(n)) & 1
    signs = (-1.0) ** (n - subsets.sum(axis=1))
    return subsets.astype(float), signs


def _check_size(n):
    if n > constants.MAX_PERMANENT_SIZE:
        raise SizeLimitError(ErrorMessages.PERMANENT_TOO_LARGE, constants.MAX_PERMANENT_SIZE, '(got {})'.format(n))


def permanent(m):
    """
    Permanent by Ryser's inclusion-exclusion formula,
    perm(A) = sum_S (-1)^(n - |S|) prod_i sum_{j in S} a_ij.
    :param m: square complex matrix, n <= 8
    :return: complex
    """
    m = np.asarray(m, dtype=complex)
    if m.size == 0:
        return 1.0 + 0j
    m = helper.check_square(m)
    n = m.shape[0]
    _check_size(n)
    subsets, signs = _subsets(n)
    sums = subsets @ m.T
    return complex(signs @ np.prod(sums, axis=1))


def permanents(mats):
    """Permanents of a stack (P, k, k) of equally sized matrices."""
    mats = np.asarray(mats, dtype=complex)
    count, k = mats.shape[0], mats.shape[-1]
    if k == 0:
        return np.ones(count, dtype=complex)
    _check_size(k)
    subsets, signs = _subsets(k)
    out = np.empty(count, dtype=complex)
    for start in range(0, count, _CHUNK):
        block = mats[start:start + _CHUNK]
        sums = np.einsum('sj,pij->psi', subsets, block)
        out[start:start + _CHUNK] = np.prod(sums, axis=2) @ signs
    return out


def permanent_naive(m):
    """Sum over all n! permutations; reference for tests."""
    m = helper.check_square(m)
    n = m.shape[0]
    rows = np.arange(n)
    return complex(sum(np.prod(m[rows, list(p)]) for p in itertools.permutations(range(n))))
