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


class GreenMachineError(Exception):
    """Base class for other exceptions"""
    def __init__(self, *message):
        """Set the error message."""
        super().__init__(' '.join(str(m) for m in message))
        self.message = ' '.join(str(m) for m in message)

    def __str__(self):
        """Return the message."""
        return repr(self.message)


class DimensionError(GreenMachineError, ValueError):
    """Raised when a matrix or vector has the wrong shape."""
    pass
