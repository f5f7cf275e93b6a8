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

import numpy as np
import pytest

from greenmachine.cli import Experiment, ExperimentConfig, OutputFormat, resolve_config, run, verify
from greenmachine.cli.main import main
from greenmachine.exceptions import ConfigError, DimensionError
from greenmachine.mesh import load_mesh, save_mesh
from greenmachine.numerics import haar_random_unitary, is_unitary, load_matrix, save_matrix


def read_rows(path):
    with open(path, newline='') as f:
        return list(csv.DictReader(f))


@pytest.fixture()
def compiled(tmp_path):
    save_matrix(tmp_path / 'U.json', haar_random_unitary(4, 11))
    out = tmp_path / 'compiled'
    assert main(['compile', '--target', str(tmp_path / 'U.json'), '--out', str(out)]) == 0
    return out


def test_config_defaults():
    config = ExperimentConfig(experiment='bsm')
    assert config.experiment == Experiment.bsm
    assert config.format == OutputFormat.csv
    assert config.threads == 1 and config.seed is None and not config.progress
    params = config.typed_parameters()
    assert params.depth == 3 and params.threshold == 0.9 and params.samples == 1000


def test_config_rejects_bad_fields():
    with pytest.raises(ConfigError):
        resolve_config('bsm', {'threads': 0})
    with pytest.raises(ConfigError):
        resolve_config('bsm', parameters={'no_such_parameter': 1})
    with pytest.raises(ConfigError):
        resolve_config('compile')


def test_flags_override_config_file(tmp_path):
    path = tmp_path / 'bsm.json'
    path.write_text(json.dumps({'experiment': 'bsm', 'seed': 5, 'threads': 2,
                                'parameters': {'samples': 3, 'depth': 4}}))
    config = resolve_config('bsm', {'threads': None, 'seed': 9}, {'samples': 2, 'depth': None}, path)
    assert config.seed == 9 and config.threads == 2
    assert config.parameters == {'samples': 2, 'depth': 4}


def test_config_file_errors(tmp_path):
    broken = tmp_path / 'broken.json'
    broken.write_text('{"experiment": "bsm",\n  "seed": }')
    with pytest.raises(ConfigError, match='line 2'):
        resolve_config('bsm', path=broken)
    other = tmp_path / 'other.json'
    other.write_text(json.dumps({'experiment': 'cost'}))
    with pytest.raises(ConfigError):
        resolve_config('bsm', path=other)


def test_compile_then_verify_passes(compiled, capsys):
    assert (compiled / 'mesh.json').exists() and (compiled / 'schedule.json').exists()
    row = read_rows(compiled / 'compile.csv')[0]
    assert int(row['n']) == 4 and int(row['rounds']) == int(row['layers'])
    assert float(row['distance']) < 1e-9
    capsys.readouterr()
    assert main(['verify', '--schedule', str(compiled / 'schedule.json'), '--mesh', str(compiled / 'mesh.json')]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report['passed'] and report['distance'] < 1e-9


def test_verify_detects_perturbed_mesh(compiled, tmp_path):
    mesh = load_mesh(compiled / 'mesh.json')
    thetas = mesh.thetas.copy()
    thetas[0] += 0.1
    save_mesh(tmp_path / 'perturbed.json', mesh.with_parameters(thetas))
    report = verify(compiled / 'schedule.json', tmp_path / 'perturbed.json')
    assert not report.passed and report.distance > 1e-3
    assert main(['verify', '--schedule', str(compiled / 'schedule.json'),
                 '--mesh', str(tmp_path / 'perturbed.json')]) == 1


def test_verify_rejects_mismatched_modes(compiled, tmp_path):
    save_matrix(tmp_path / 'U8.json', haar_random_unitary(8, 3))
    other = tmp_path / 'eight'
    assert main(['compile', '--target', str(tmp_path / 'U8.json'), '--out', str(other)]) == 0
    with pytest.raises(DimensionError):
        verify(compiled / 'schedule.json', other / 'mesh.json')
    assert main(['verify', '--schedule', str(compiled / 'schedule.json'), '--mesh', str(other / 'mesh.json')]) == 1


def test_compile_fitted_scf_verifies(tmp_path):
    save_matrix(tmp_path / 'U.json', haar_random_unitary(4, 5))
    out = tmp_path / 'scf'
    assert main(['compile', '--target', str(tmp_path / 'U.json'), '--topology', 'scf', '--restarts', '2',
                 '--seed', '1', '--out', str(out)]) == 0
    assert verify(out / 'schedule.json', out / 'mesh.json').passed


def test_simulate_writes_unitary(compiled, tmp_path):
    out = tmp_path / 'sim'
    assert main(['simulate', '--schedule', str(compiled / 'schedule.json'), '--out', str(out)]) == 0
    assert is_unitary(load_matrix(out / 'unitary.json'))
    row = read_rows(out / 'simulate.csv')[0]
    assert float(row['transmission']) == pytest.approx(1.0, abs=1e-12)


def test_bsm_rows_summary_and_manifest(tmp_path):
    out = tmp_path / 'bsm'
    assert main(['bsm', '--samples', '3', '--seed', '7', '--out', str(out)]) == 0
    rows = read_rows(out / 'bsm.csv')
    assert len(rows) == 3
    assert list(rows[0]) == ['sample_id', 'sigma', 'depth', 'threshold', 'success', 'error']
    assert all(float(r['success']) == pytest.approx(0.75, abs=1e-9) for r in rows)
    summary = json.loads((out / 'bsm_summary.json').read_text())
    assert summary['success']['median'] == pytest.approx(0.75, abs=1e-9)
    manifest = json.loads((out / 'manifest.json').read_text())
    assert manifest['seed'] == 7
    assert manifest['config']['experiment'] == 'bsm'
    assert manifest['config']['parameters'] == {'samples': 3}
    assert set(manifest['versions']) >= {'greenmachine', 'numpy', 'scipy', 'pydantic', 'python'}
    assert manifest['files'] == ['bsm.csv', 'bsm_summary.json']


def test_same_seed_gives_identical_files(tmp_path):
    for name in ('a', 'b'):
        assert main(['bsm', '--sigma', '0.02', '--samples', '3', '--seed', '7', '--threads', '2',
                     '--out', str(tmp_path / name)]) == 0
    for name in ('bsm.csv', 'bsm_summary.json'):
        assert (tmp_path / 'a' / name).read_bytes() == (tmp_path / 'b' / name).read_bytes()


def test_missing_seed_is_recorded(tmp_path):
    result = run(ExperimentConfig(experiment='cost', output_path=str(tmp_path), parameters={'n': [8]}))
    manifest = json.loads(result.manifest.read_text())
    assert isinstance(manifest['seed'], int) and manifest['seed'] == result.config.seed


def test_bsm_threshold_sweep_json(tmp_path):
    out = tmp_path / 'sweep'
    assert main(['bsm', '--sweep', 'threshold', '--thresholds', '0.26', '0.9', '--samples', '2',
                 '--format', 'json', '--seed', '1', '--out', str(out)]) == 0
    rows = json.loads((out / 'bsm.json').read_text())
    assert len(rows) == 4
    summary = json.loads((out / 'bsm_summary.json').read_text())
    assert [s['threshold'] for s in summary] == [0.26, 0.9]
    assert summary[0]['success']['mean'] == pytest.approx(1.0, abs=1e-9)


def test_transport_heatmaps(tmp_path):
    out = tmp_path / 'walk'
    assert main(['transport', '--input', '1', '0', '0', '0', '1', '0', '0', '0', '--out', str(out)]) == 0
    for name in ('transport_occupation.csv', 'transport_stages.csv', 'transport_coincidence.csv'):
        assert (out / name).exists()
    stages = read_rows(out / 'transport_stages.csv')
    assert len(stages) == 7
    assert float(stages[0]['bunching']) == pytest.approx(1.0, abs=1e-9)


def test_transport_json_signature(tmp_path):
    out = tmp_path / 'walk'
    assert main(['transport', '--format', 'json', '--out', str(out)]) == 0
    data = json.loads((out / 'transport.json').read_text())
    assert data['localization_signature'] == [5, 7]
    assert 'coincidence' not in data


def test_scaling_rows(tmp_path):
    out = tmp_path / 'scaling'
    assert main(['scaling', '--n', '4', '--sigma', '0.01', '--samples', '4', '--seed', '3',
                 '--out', str(out)]) == 0
    rows = read_rows(out / 'scaling.csv')
    assert [r['kind'] for r in rows] == ['uncorrelated', 'correlated']
    assert all(float(r['matrix_error_median']) > 0 for r in rows)


def test_cost_tables(tmp_path):
    out = tmp_path / 'cost'
    assert main(['cost', '--n', '16', '--taus', '1e-8', '--out', str(out)]) == 0
    rows = read_rows(out / 'cost.csv')
    assert len(rows) == 5
    assert 'loss_outer_loop' in rows[0]
    rates = read_rows(out / 'mac_rate.csv')
    assert float(rates[0]['single_stage']) == pytest.approx(1e8)


def test_module_errors_exit_one(tmp_path, capsys):
    assert main(['cost', '--architectures', 'ggm_scf', '--n', '100', '--out', str(tmp_path)]) == 1
    assert main(['bsm', '--depth', '2', '--samples', '1', '--out', str(tmp_path)]) == 1
    err = capsys.readouterr().err
    assert err.count('greenmachine: ') == 2


def test_config_errors_exit_two(tmp_path, capsys):
    assert main(['bsm', '--threads', '0', '--out', str(tmp_path)]) == 2
    assert main(['compile', '--out', str(tmp_path)]) == 2
    assert main(['bsm', '--config', str(tmp_path / 'missing.json')]) == 2
    assert 'threads' in capsys.readouterr().err
