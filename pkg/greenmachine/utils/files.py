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


import csv
import json
from pathlib import Path

import pydantic

from greenmachine.exceptions import ConfigError
from greenmachine.utils import error_messages as ErrorMessages


def describe_validation_error(err):
    """One line per failing field, as 'loc.path: message'."""
    lines = []
    for item in err.errors():
        loc = '.'.join(str(part) for part in item.get('loc', ())) or '<root>'
        lines.append('{}: {}'.format(loc, item.get('msg', '')))
    return '; '.join(lines)


def parse_json(text, source='<string>'):
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise ConfigError(ErrorMessages.INVALID_FILE, source,
                          'line {} column {}: {}'.format(err.lineno, err.colno, err.msg))


def parse_model(model_cls, text, source='<string>'):
    """Validate JSON text against a pydantic model, raising ConfigError with line or field detail."""
    data = parse_json(text, source)
    try:
        return model_cls.model_validate(data)
    except pydantic.ValidationError as err:
        raise ConfigError(ErrorMessages.INVALID_FILE, source, describe_validation_error(err))


def read_text(path):
    try:
        return Path(path).read_text()
    except OSError as err:
        raise ConfigError(ErrorMessages.INVALID_FILE, str(path), str(err))


def read_json(path):
    """Raw JSON document, for callers that merge it before validation."""
    return parse_json(read_text(path), str(path))


def read_model(model_cls, path):
    return parse_model(model_cls, read_text(path), str(path))


def dump_json(data):
    """Deterministic JSON text for data files."""
    return json.dumps(data, indent=2, sort_keys=True) + '\n'


def write_json(path, data):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_json(data))
    return path


def write_model(path, model):
    return write_json(path, model.model_dump(mode='json'))


def schema_error(source, detail):
    return ConfigError(ErrorMessages.INVALID_FILE, str(source), detail)


def write_csv(path, rows, fieldnames=None):
    """Header row plus one line per dict; columns default to the first row's keys."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    rows = list(rows)
    if fieldnames is None:
        fieldnames = list(rows[0]) if rows else []
    with path.open('w', newline='') as f:
        writer = csv.DictWriter(f, fieldnames=fieldnames, extrasaction='ignore', lineterminator='\n')
        writer.writeheader()
        writer.writerows(rows)
    return path
