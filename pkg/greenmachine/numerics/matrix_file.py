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


from typing import List

import numpy as np
from pydantic import BaseModel, Field, model_validator

from greenmachine.utils import constants, files


class MatrixFile(BaseModel):
    """Shared matrix format: {"n": int, "re": [[...]], "im": [[...]]}, row-major."""

    n: int = Field(ge=1, le=constants.MAX_MATRIX_FILE_SIZE)
    re: List[List[float]]
    im: List[List[float]]

    @model_validator(mode='after')
    def check_shape(self):
        for name in ('re', 'im'):
            rows = getattr(self, name)
            if len(rows) != self.n or any(len(row) != self.n for row in rows):
                raise ValueError('{} must be an n x n array'.format(name))
        return self

    def to_array(self):
        return np.asarray(self.re, dtype=float) + 1j * np.asarray(self.im, dtype=float)

    @classmethod
    def from_array(cls, m):
        m = np.asarray(m, dtype=complex)
        return cls(n=m.shape[0], re=m.real.tolist(), im=m.imag.tolist())


def load_matrix(path):
    return files.read_model(MatrixFile, path).to_array()


def save_matrix(path, m):
    return files.write_model(path, MatrixFile.from_array(m))
