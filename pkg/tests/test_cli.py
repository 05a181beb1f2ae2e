# tests/test_cli.py
import io
import json

import pytest

from arglogic_toolbox import main
from cli_modules.common import (
    EXIT_COUNTEREXAMPLE,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_RESOURCE_LIMIT,
    EXIT_SINGULARITY,
)

MUTUAL_APX = "arg(a).\narg(b).\natt(a,b).\natt(b,a).\n"


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / 'config.ini'
    path.write_text(
        "[limits]\nmax_args = 12\nmax_grid_points = 100000\n"
        "[equational]\nmax_iters = 50\ntolerance = 1e-9\n"
        "[verify]\ngrid_resolution = 4\nmax_grid_points = 5000\nluka_samples = 200\nseed = 7\n",
        encoding='utf-8',
    )
    return str(path)


@pytest.fixture
def apx(tmp_path):
    def write(text, name='af.apx'):
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return str(path)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestSemanticsCommand:

    def test_complete(self, capsys, apx, config_file):
        code, out = run(capsys, 'semantics', apx(MUTUAL_APX), '--semantics', 'complete', '--config', config_file)
        data = json.loads(out)
        assert code == EXIT_OK
        assert data['count'] == 3
        assert data['labellings'][1] == {'a': '1/2', 'b': '1/2'}
        assert data['extensions'] == [['b'], [], ['a']]

    def test_no_stable_extension_is_not_an_error(self, capsys, apx, config_file):
        code, out = run(capsys, 'semantics', apx("arg(a). att(a,a)."), '-s', 'stable', '--config', config_file)
        assert code == EXIT_OK
        assert json.loads(out)['labellings'] == []

    def test_malformed_input(self, capsys, apx, config_file):
        code = main(['semantics', apx("arg(a"), '--config', config_file])
        assert code == EXIT_INPUT_ERROR
        assert 'ligne 1' in capsys.readouterr().err

    def test_non_utf8_file(self, capsys, tmp_path, config_file):
        path = tmp_path / 'bad.apx'
        path.write_bytes(b"arg(a).\n\xff\xfe att(a,a).\n")
        code = main(['semantics', str(path), '--config', config_file])
        assert code == EXIT_INPUT_ERROR
        assert 'octet 8' in capsys.readouterr().err

    def test_non_utf8_stdin(self, capsys, config_file, monkeypatch):
        monkeypatch.setattr('sys.stdin', io.TextIOWrapper(io.BytesIO(b"\xff"), encoding='utf-8'))
        assert main(['semantics', '-', '--config', config_file]) == EXIT_INPUT_ERROR

    def test_argument_cap(self, capsys, apx, config_file):
        code = main(['semantics', apx(MUTUAL_APX), '--max-args', '1', '--config', config_file])
        assert code == EXIT_RESOURCE_LIMIT

    def test_environment_cap(self, capsys, apx, config_file, monkeypatch):
        monkeypatch.setenv('ARGLOGIC_MAX_ARGS', '1')
        assert main(['semantics', apx(MUTUAL_APX), '--config', config_file]) == EXIT_RESOURCE_LIMIT

    def test_tgf_from_stdin(self, capsys, config_file, monkeypatch):
        monkeypatch.setattr('sys.stdin', io.StringIO("a\nb\n#\na b\n"))
        code, out = run(capsys, 'semantics', '-', '--format', 'tgf', '-s', 'grounded', '--config', config_file)
        assert code == EXIT_OK
        assert json.loads(out)['extensions'] == [['a']]

    def test_text_output(self, capsys, apx, config_file):
        code, out = run(capsys, 'semantics', apx(MUTUAL_APX), '-s', 'stable', '--output', 'text',
                        '--config', config_file)
        assert code == EXIT_OK
        assert '(a=0, b=1)  {b}' in out


class TestEncodeCommand:

    def test_normal(self, capsys, apx, config_file):
        code, out = run(capsys, 'encode', apx(MUTUAL_APX), '--config', config_file)
        data = json.loads(out)
        assert data['text'] == '((a <-> (~b)) & (b <-> (~a)))'
        assert data['formula']['op'] == 'and'

    def test_regular_text(self, capsys, apx, config_file):
        code, out = run(capsys, 'encode', apx("arg(a). arg(b). att(a,b)."), '-e', 'regular',
                        '--output', 'text', '--config', config_file)
        assert code == EXIT_OK
        assert '(b <-> F)' in out


class TestModelsCommand:

    @pytest.mark.parametrize('logic, count', [('pl3l', 3), ('pl3k', 2), ('pl2', 2), ('fuzzy:standard:goedel', 5)])
    def test_counts(self, capsys, apx, config_file, logic, count):
        code, out = run(capsys, 'models', apx(MUTUAL_APX), '--logic', logic, '--grid', '4', '--config', config_file)
        assert code == EXIT_OK
        assert json.loads(out)['count'] == count

    def test_grid_cap(self, capsys, apx, config_file):
        code = main(['models', apx(MUTUAL_APX), '--logic', 'fuzzy', '--grid', '4',
                     '--max-grid-points', '10', '--config', config_file])
        assert code == EXIT_RESOURCE_LIMIT

    def test_unknown_logic(self, capsys, apx, config_file):
        assert main(['models', apx(MUTUAL_APX), '--logic', 'pl9', '--config', config_file]) == EXIT_INPUT_ERROR


class TestSolveCommand:

    def test_grid(self, capsys, apx, config_file):
        code, out = run(capsys, 'solve', apx(MUTUAL_APX), '--system', 'max', '--grid', '4', '--config', config_file)
        data = json.loads(out)
        assert code == EXIT_OK
        assert data['count'] == 5
        assert data['solutions'][1] == {'a': '1/4', 'b': '3/4'}

    def test_iterate_two_cycle(self, capsys, apx, config_file):
        code, out = run(capsys, 'solve', apx(MUTUAL_APX), '--iterate', '--config', config_file)
        data = json.loads(out)
        assert code == EXIT_OK
        assert data['converged'] is False
        assert data['period'] == 2

    def test_iterate_inverse_chain(self, capsys, apx, config_file):
        code, out = run(capsys, 'solve', apx("arg(a). arg(b). att(a,b)."), '--system', 'inverse',
                        '--iterate', '--start', '0,0', '--config', config_file)
        data = json.loads(out)
        assert data['converged'] is True
        assert data['assignment'] == {'a': '1', 'b': '0'}

    def test_geometrical_singularity(self, capsys, apx, config_file):
        text = "arg(c). arg(a). arg(b). att(a,c). att(b,c)."
        code = main(['solve', apx(text), '--system', 'geometrical', '--grid', '1', '--config', config_file])
        assert code == EXIT_SINGULARITY

    def test_bad_start(self, capsys, apx, config_file):
        code = main(['solve', apx(MUTUAL_APX), '--iterate', '--start', '0', '--config', config_file])
        assert code == EXIT_INPUT_ERROR

    def test_grid_and_iterate_are_exclusive(self, capsys, apx, config_file):
        assert main(['solve', apx(MUTUAL_APX), '--grid', '2', '--iterate']) == EXIT_INPUT_ERROR


class TestVerifyCommand:

    def test_counterexample_theorem(self, capsys, config_file):
        code, out = run(capsys, 'verify', '--theorem', 'ec2-l-counterexample', '--config', config_file)
        report, = json.loads(out)
        assert code == EXIT_OK
        assert report['pass'] is True
        assert report['metadata']['witness'] == {'a': '1/2', 'b': '0'}

    def test_all_on_fixtures(self, capsys, config_file):
        code, out = run(capsys, 'verify', '--all', '--fixtures', '--config', config_file)
        reports = json.loads(out)
        assert code == EXIT_OK
        assert len(reports) == 23
        assert all(r['pass'] for r in reports)

    def test_single_framework(self, capsys, apx, config_file):
        code, out = run(capsys, 'verify', apx(MUTUAL_APX), '-t', 'complete-eq-ec1-l', '-t', 'stable-eq-ec1-k',
                        '--config', config_file)
        assert code == EXIT_OK
        assert [r['theorem'] for r in json.loads(out)] == ['complete-eq-ec1-l', 'stable-eq-ec1-k']

    def test_small_corpus(self, capsys, config_file):
        code, out = run(capsys, 'verify', '-t', 'ec2-pl2-fwd', '-t', 'ec2-pl2-bwd', '--corpus',
                        '--seed', '7', '--count', '10', '--nmax', '4', '--config', config_file)
        assert code == EXIT_OK
        assert all(r['frameworks'] == 10 for r in json.loads(out))

    def test_unsupported_tnorm(self, capsys, config_file):
        code = main(['verify', '-t', 'zdf-tcom-complete', '--zdf-tnorm', 'lukasiewicz', '--config', config_file])
        assert code == EXIT_INPUT_ERROR

    def test_no_theorem_selected(self, capsys, config_file):
        assert main(['verify', '--config', config_file]) == EXIT_INPUT_ERROR

    def test_text_summary(self, capsys, config_file):
        code, out = run(capsys, 'verify', '-t', 'luka-nary', '--output', 'text', '--config', config_file)
        assert code == EXIT_OK
        assert 'luka-nary' in out


def test_exit_code_constants():
    assert (EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INPUT_ERROR, EXIT_RESOURCE_LIMIT, EXIT_SINGULARITY) == (0, 1, 2, 3, 4)


def test_missing_subcommand(capsys):
    assert main([]) == EXIT_INPUT_ERROR
