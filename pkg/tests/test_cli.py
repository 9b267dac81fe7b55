"""
* Nom de l'application : TraceSampler SGI-TS
 * Description : End-to-end runs of the command line, in-process
"""

import csv
import json
import os

import pytest

from cli import main
from commands.compare import parse_run_matrix
from config import Config
from conftest import golden_path, read_golden
from scripts.generate_golden import SEEDED
from utils.errors import RunMatrixError

HIST = Config.HISTOGRAM_PATH


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in list(os.environ):
        if name.startswith('SGI_TS_'):
            monkeypatch.delenv(name, raising=False)


@pytest.fixture(scope='module')
def pu_tds_file(tmp_path_factory):
    path = tmp_path_factory.mktemp('data') / 'pu_tds.csv'
    assert main(['synth', '--out', str(path)]) == 0
    return path


def read_bytes(path):
    with open(path, 'rb') as f:
        return f.read()


def read_rows(path):
    with open(path, 'r', encoding='utf-8', newline='') as f:
        return list(csv.reader(f))


class TestSynth:

    def test_default_histogram(self, pu_tds_file):
        rows = read_rows(pu_tds_file)
        assert rows[0] == ['No.', 'Time', 'Source', 'Destination', 'Protocol', 'Length', 'Info']
        assert len(rows) == 30001
        assert rows[1][0] == '1' and rows[-1][0] == '30000'

    def test_same_seed_same_bytes(self, tmp_path, pu_tds_file):
        again = tmp_path / 'again.csv'
        assert main(['synth', '--seed', '0', '--out', str(again)]) == 0
        assert read_bytes(again) == read_bytes(pu_tds_file)
        other = tmp_path / 'other.csv'
        assert main(['synth', '--seed', '1', '--out', str(other)]) == 0
        assert read_bytes(other) != read_bytes(pu_tds_file)

    def test_single_class_spec(self, tmp_path, capsys):
        spec = tmp_path / 'one.hist'
        spec.write_text('A,1\n', encoding='utf-8')
        out = tmp_path / 'one.csv'
        assert main(['synth', '--histogram', str(spec), '--out', str(out)]) == 0
        assert len(read_rows(out)) == 2
        assert 'Wrote 1 records, 1 classes' in capsys.readouterr().out

    def test_stdout_carries_only_the_dataset(self, tmp_path, capsys):
        spec = tmp_path / 'two.hist'
        spec.write_text('A,2\nB,1\n', encoding='utf-8')
        assert main(['synth', '--histogram', str(spec)]) == 0
        captured = capsys.readouterr()
        assert captured.out.startswith('No.,Time,')
        assert 'Wrote 3 records' in captured.err

    def test_bad_spec_is_usage_error(self, tmp_path, capsys):
        spec = tmp_path / 'bad.hist'
        spec.write_text('A,1\nA,2\n', encoding='utf-8')
        assert main(['synth', '--histogram', str(spec)]) == 2
        assert 'HISTOGRAM_SPEC_ERROR' in capsys.readouterr().err

    def test_missing_spec_file_is_runtime_error(self, tmp_path):
        assert main(['synth', '--histogram', str(tmp_path / 'nope.hist')]) == 1


class TestAnalyze:

    def test_markdown_golden(self, capsys):
        assert main(['analyze', '--histogram', HIST, '--arrangement', 'grouped']) == 0
        assert capsys.readouterr().out == read_golden('pu_tds_analyze.md')

    def test_csv_golden(self, capsys):
        assert main(['analyze', '--histogram', HIST, '--arrangement', 'grouped', '--format', 'csv']) == 0
        assert capsys.readouterr().out == read_golden('pu_tds_analyze.csv')

    def test_ingested_file(self, pu_tds_file, capsys):
        assert main(['analyze', '--input', str(pu_tds_file)]) == 0
        out = capsys.readouterr().out
        rows = [line for line in out.splitlines() if line.startswith('| ') and not line.startswith('| Protocol')]
        assert len(rows) == 25
        assert '| TCP | 11735 | 39.117 | 0.39117 |' in rows
        assert '- Imbalance ratio: 11735.000' in out

    def test_single_class_file(self, tmp_path, capsys):
        data = tmp_path / 'one.csv'
        data.write_text('No.,Protocol\n1,A\n2,A\n3,A\n', encoding='utf-8')
        assert main(['analyze', '--input', str(data)]) == 0
        assert '| A | 3 | 100.000 | 1.00000 |' in capsys.readouterr().out

    def test_missing_label_column(self, tmp_path, capsys):
        data = tmp_path / 'nolabel.csv'
        data.write_text('No.,Info\n1,x\n', encoding='utf-8')
        assert main(['analyze', '--input', str(data)]) == 1
        assert 'MISSING_LABEL_COLUMN' in capsys.readouterr().err

    def test_label_column_flag(self, tmp_path, capsys):
        data = tmp_path / 'apps.ndjson'
        data.write_text('{"app": "dns"}\n{"app": "http"}\n', encoding='utf-8')
        assert main(['analyze', '--input', str(data), '--label-column', 'app', '--format', 'json']) == 0
        report = json.loads(capsys.readouterr().out)
        assert [row['label'] for row in report['per_class']] == ['dns', 'http']

    def test_invalid_utf8_is_malformed_row(self, tmp_path, capsys):
        data = tmp_path / 'latin1.csv'
        data.write_bytes(b'No.,Protocol\n1,A\n2,\xe9B\n')
        assert main(['analyze', '--input', str(data)]) == 1
        err = capsys.readouterr().err
        assert 'MALFORMED_ROW' in err
        assert 'ligne 3' in err

    def test_utf8_bom_input(self, tmp_path, capsys):
        data = tmp_path / 'excel.csv'
        data.write_bytes(b'\xef\xbb\xbfProtocol,No.\nA,1\nA,2\n')
        assert main(['analyze', '--input', str(data)]) == 0
        assert '| A | 2 | 100.000 | 1.00000 |' in capsys.readouterr().out

    def test_histogram_encoding_is_usage_error(self, tmp_path, capsys):
        spec = tmp_path / 'bad.hist'
        spec.write_bytes(b'A,1\n\xff,2\n')
        assert main(['analyze', '--histogram', str(spec)]) == 2
        assert 'HISTOGRAM_SPEC_ERROR' in capsys.readouterr().err

    def test_many_decimals(self, capsys):
        assert main(['analyze', '--histogram', HIST, '--decimals', '30']) == 0
        assert '- Imbalance ratio: 11735.' + '0' * 30 in capsys.readouterr().out

    def test_french(self, capsys):
        assert main(['--lang', 'fr', 'analyze', '--histogram', HIST]) == 0
        assert '| Protocole | Nb. de paquets | % de paquets | P(s) |' in capsys.readouterr().out

    def test_binary_format_needs_out(self, tmp_path):
        assert main(['analyze', '--histogram', HIST, '--format', 'pdf']) == 2
        out = tmp_path / 'report.xlsx'
        assert main(['analyze', '--histogram', HIST, '--format', 'xlsx', '--out', str(out)]) == 0
        assert read_bytes(out)[:2] == b'PK'


class TestSample:

    def test_stratified(self, pu_tds_file, tmp_path, capsys):
        out = tmp_path / 'strat.csv'
        code = main(['sample', '--input', str(pu_tds_file), '--family', 'stratified', '--interval', '5',
                     '--out', str(out)])
        assert code == 0
        rows = read_rows(out)
        assert rows[0] == ['source_position', 'label', 'synthetic']
        assert len(rows) == 6013
        captured = capsys.readouterr()
        assert '- Total: 6012' in captured.out
        assert 'Wrote 6012 sampled records' in captured.err

    def test_systematic_interval_one_copies_positions(self, pu_tds_file, tmp_path):
        out = tmp_path / 'copy.csv'
        assert main(['sample', '--input', str(pu_tds_file), '--family', 'systematic', '--interval', '1',
                     '--out', str(out)]) == 0
        source = read_rows(pu_tds_file)[1:]
        rows = read_rows(out)[1:]
        assert [int(r[0]) for r in rows] == list(range(1, 30001))
        assert [r[1] for r in rows] == [r[4] for r in source]

    def test_under_over(self, pu_tds_file, tmp_path):
        out = tmp_path / 'balanced.csv'
        assert main(['sample', '--input', str(pu_tds_file), '--family', 'underover', '--k', '100',
                     '--out', str(out)]) == 0
        rows = read_rows(out)[1:]
        assert len(rows) == 2500
        per_class = {}
        for _, label, _ in rows:
            per_class[label] = per_class.get(label, 0) + 1
        assert set(per_class.values()) == {100}
        assert len(per_class) == 25

    def test_seeded_runs_are_reproducible(self, pu_tds_file, tmp_path):
        outputs = []
        for name, seed in (('a', '4'), ('b', '4'), ('c', '5')):
            sample_out = tmp_path / f'{name}.csv'
            report_out = tmp_path / f'{name}.json'
            assert main(['sample', '--input', str(pu_tds_file), '--family', 'random', '--n', '500',
                         '--seed', seed, '--out', str(sample_out), '--report', str(report_out),
                         '--format', 'json']) == 0
            outputs.append((read_bytes(sample_out), read_bytes(report_out)))
        assert outputs[0] == outputs[1]
        assert outputs[0][0] != outputs[2][0]
        assert json.loads(outputs[0][1])['seed'] == 4

    @pytest.mark.parametrize('args', [
        ['--family', 'random'],
        ['--family', 'random', '--n', '0'],
        ['--family', 'systematic', '--interval', '5', '--start', '9'],
        ['--family', 'underover', '--k', '-1'],
        ['--family', 'reservoir', '--n', '5'],
    ])
    def test_invalid_parameters_exit_2_before_reading(self, tmp_path, args):
        missing_input = str(tmp_path / 'does-not-exist.csv')
        assert main(['sample', '--input', missing_input] + args) == 2

    def test_sample_and_report_cannot_share_stdout(self, tmp_path, capsys):
        args = ['sample', '--histogram', HIST, '--family', 'systematic', '--interval', '10', '--out', '-']
        assert main(args) == 2
        assert main(args + ['--report', '-']) == 2
        report = tmp_path / 'report.md'
        capsys.readouterr()
        assert main(args + ['--report', str(report)]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == 'source_position,label,synthetic'
        assert len(lines) == 3001
        assert report.read_text(encoding='utf-8').startswith('# Percentage of packets selected per protocol')

    def test_input_is_never_overwritten(self, pu_tds_file):
        before = read_bytes(pu_tds_file)
        assert main(['sample', '--input', str(pu_tds_file), '--family', 'systematic', '--interval', '2',
                     '--out', str(pu_tds_file)]) == 2
        assert main(['analyze', '--input', str(pu_tds_file), '--out', str(pu_tds_file)]) == 2
        assert read_bytes(pu_tds_file) == before

    def test_both_sources_rejected(self, pu_tds_file):
        assert main(['analyze', '--input', str(pu_tds_file), '--histogram', HIST]) == 2


class TestCompare:

    def write_matrix(self, tmp_path, text, name='runs.txt'):
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return str(path)

    def test_stratified_matrix_golden(self, tmp_path, capsys):
        matrix = self.write_matrix(tmp_path, ''.join(f"stratified interval={i}\n" for i in range(5, 11)))
        assert main(['compare', '--histogram', HIST, '--arrangement', 'grouped', '--matrix', matrix,
                     '--format', 'csv']) == 0
        assert capsys.readouterr().out == read_golden('pu_tds_stratified_compare.csv')

    def test_workers_do_not_change_output(self, tmp_path, capsys):
        runs = [{'family': 'random', 'n': n} for n in (500, 1000, 2000)] + [{'family': 'underover', 'k': 100}]
        matrix = self.write_matrix(tmp_path, json.dumps(runs), 'runs.json')
        outputs = []
        for workers in ('1', '3'):
            assert main(['compare', '--histogram', HIST, '--matrix', matrix, '--workers', workers]) == 0
            outputs.append(capsys.readouterr().out)
        assert outputs[0] == outputs[1]
        assert '| Protocol | random n=500 | random n=1000 | random n=2000 | underover k=100, n=2500 |' in outputs[0]

    def test_single_run(self, tmp_path, capsys):
        matrix = self.write_matrix(tmp_path, "# one run\nsystematic interval=10\n")
        assert main(['compare', '--histogram', HIST, '--matrix', matrix, '--format', 'json']) == 0
        data = json.loads(capsys.readouterr().out)
        assert len(data['columns']) == 1
        assert data['columns'][0]['size'] == 3000

    def test_bad_matrix(self, tmp_path, capsys):
        matrix = self.write_matrix(tmp_path, "stratified interval=5\nrandom size=4\n")
        assert main(['compare', '--histogram', HIST, '--matrix', matrix]) == 2
        assert 'ligne 2' in capsys.readouterr().err


def test_parse_run_matrix():
    specs = parse_run_matrix("random n=500 with_replacement=true  # comment\n\nunderover k=100 seed=3\n", 9)
    assert [(s.family, s.parameter, s.seed) for s in specs] == [('random', 500, 9), ('underover', 100, 3)]
    assert specs[0].with_replacement
    specs = parse_run_matrix('[{"family": "stratified", "i": 7}]')
    assert specs[0].interval == 7
    specs = parse_run_matrix("random n=5 with_replacement=no\nsystematic interval=5 start=3\n")
    assert not specs[0].with_replacement
    assert specs[1].start == 3
    for text in ('', '# only comments\n', '{"family": "random"}', '[1, 2]', 'random n', 'random n="500',
                 'systematic interval=5 start=0', 'random n=5 with_replacement=ture',
                 '[{"family": "random", "n": 5, "with_replacement": 2}]'):
        with pytest.raises(RunMatrixError):
            parse_run_matrix(text)


class TestOracle:

    def test_analytic_series(self, capsys):
        assert main(['oracle', '--histogram', HIST, '--trials', '0']) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == 'x,observed,expected'
        assert lines[1] == '500,,8.545259'
        values = [float(line.split(',')[2]) for line in lines[1:]]
        assert len(values) == 8
        assert all(later < earlier for earlier, later in zip(values, values[1:]))

    def test_full_sample(self, capsys):
        assert main(['oracle', '--histogram', HIST, '--trials', '0', '--n', '30000']) == 0
        assert capsys.readouterr().out == 'x,observed,expected\n30000,,0.000000\n'

    def test_n_above_population(self):
        assert main(['oracle', '--histogram', HIST, '--trials', '0', '--n', '30001']) == 1

    def test_monte_carlo_is_reproducible(self, tmp_path):
        outs = []
        for name in ('a', 'b'):
            out = tmp_path / f'{name}.csv'
            assert main(['oracle', '--histogram', HIST, '--n', '500,2000', '--trials', '100', '--seed', '3',
                         '--bands', '--out', str(out)]) == 0
            outs.append(read_bytes(out))
        assert outs[0] == outs[1]
        assert outs[0].decode().splitlines()[0] == 'x,observed,expected,low,high'

    def test_bad_n_list(self):
        assert main(['oracle', '--histogram', HIST, '--n', '500,abc']) == 2

    def test_systematic_loss(self, capsys):
        assert main(['systematic-loss', '--histogram', HIST, '--arrangement', 'grouped']) == 0
        assert capsys.readouterr().out == (
            'x,observed,expected\n5,3.000000,\n6,3.000000,\n7,3.000000,\n'
            '8,5.000000,\n9,3.000000,\n10,5.000000,\n'
        )


def test_split(pu_tds_file, tmp_path, capsys):
    train, test = tmp_path / 'train.csv', tmp_path / 'test.csv'
    assert main(['split', '--input', str(pu_tds_file), '--test-fraction', '0.3',
                 '--train-out', str(train), '--test-out', str(test)]) == 0
    train_rows, test_rows = read_rows(train)[1:], read_rows(test)[1:]
    assert len(train_rows) + len(test_rows) == 30000
    # TCP 11735 * 0.3 rounds to 3521
    assert sum(1 for row in test_rows if row[4] == 'TCP') == 3521
    assert 'Train: ' in capsys.readouterr().out


def test_usage_errors():
    assert main([]) == 2
    assert main(['teleport']) == 2
    assert main(['sample', '--histogram', HIST, '--family', 'random', '--n', 'ten']) == 2
    assert main(['--config', 'staging', 'analyze', '--histogram', HIST]) == 2


def test_invalid_environment(monkeypatch, capsys):
    monkeypatch.setenv('SGI_TS_DECIMALS', 'three')
    assert main(['analyze', '--histogram', HIST]) == 2
    assert 'CONFIG_ERROR' in capsys.readouterr().err


def test_environment_defaults(monkeypatch, capsys):
    monkeypatch.setenv('SGI_TS_FORMAT', 'csv')
    monkeypatch.setenv('SGI_TS_DECIMALS', '1')
    assert main(['analyze', '--histogram', HIST, '--arrangement', 'grouped']) == 0
    out = capsys.readouterr().out
    assert out.startswith('label,source_count,')
    assert 'TCP,11735,11735,39.1,0.391' in out.splitlines()


def test_help_exits_cleanly(capsys):
    assert main(['--help']) == 0
    assert 'sgi-ts' in capsys.readouterr().out


@pytest.mark.parametrize('name', sorted(SEEDED))
def test_seed_zero_golden(name, tmp_path):
    """Byte-exact seed 0 outputs of the randomized samplers."""
    assert os.path.exists(golden_path(name)), f"{name} missing (python scripts/generate_golden.py --seeded-only)"
    args = SEEDED[name]
    out = tmp_path / name
    assert main(args[:1] + ['--histogram', HIST, '--seed', '0'] + args[1:] + ['--report', str(out)]) == 0
    assert read_bytes(out) == read_bytes(golden_path(name))
