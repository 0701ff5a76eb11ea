import json
import pytest
from hopfsage.services.fixture_service import FixtureService
from hopfsage.services.instance_service import InstanceService


def write_report(tmp_path, result, name='report.json'):
    path = tmp_path / name
    path.write_text(result.stdout, encoding='utf-8')
    return str(path)


class TestCommands:
    def test_validate_fixture(self, runner):
        result = runner('validate', 'a4.hm')
        assert result.exit_code == 0
        assert result.stdout.startswith('validate a4.hm over Q\n')
        assert 'module M2: valid' in result.stdout
        assert 'exit status: 0' in result.stdout

    def test_truncated_module_is_not_projective(self, runner):
        result = runner('certify-projective', 'a4.hm', '--module', 'M2')
        assert result.exit_code == 1
        assert 'module M2: not-projective' in result.stdout

    def test_regular_module_is_projective(self, runner):
        result = runner('certify-projective', 'a4.hm', '--module', 'M')
        assert result.exit_code == 0
        assert 'witness split-over-B (over-B)' in result.stdout
        assert 'witness descended-split (over-B) via canonical' in \
            result.stdout

    def test_total_integral(self, runner):
        result = runner('total-integral', 'a4.hm', '--json')
        report = json.loads(result.stdout)
        assert result.exit_code == 0
        assert report['results'][0]['verdict'] == 'exists'
        assert report['results'][0]['details']['exactness'] == [
            'H-cosemisimple', 'total-integral-exists']

    def test_no_total_integral_over_sweedler(self, runner):
        assert runner('total-integral', 'sw4.hm').exit_code == 1

    def test_decompose_simple_module(self, runner):
        result = runner('decompose', 'hh.hm', '--module', 'M')
        assert result.exit_code == 0
        assert 'summands: 1' in result.stdout

    def test_decompose_nonsplit_module(self, runner):
        result = runner('decompose', 'a4.hm', '--module', 'M2', '--json')
        report = json.loads(result.stdout)
        assert result.exit_code == 1
        assert report['results'][0]['details']['complete'] is False

    @pytest.mark.parametrize('args,code', [
        (('h-simple', 'hh.hm'), 0),
        (('h-simple', 'a4.hm'), 1),
        (('is-field', 'hh.hm'), 0),
        (('is-field', 'a4.hm'), 1),
        (('prop25', 'a4.hm'), 0),
        (('prop43', 'hh.hm', '--module', 'M'), 0),
        (('coinvariants', 'a4.hm', '--algebra', 'A4'), 0),
    ])
    def test_exit_status(self, runner, args, code):
        assert runner(*args).exit_code == code

    def test_timing_is_opt_in(self, runner):
        assert 'timing:' not in runner('validate', 'hh.hm').stdout
        assert 'timing:' in runner('validate', 'hh.hm', '--timing').stdout

    def test_output_is_deterministic(self, runner):
        first = runner('prop25', 'a4.hm', '--json', '--jobs', '2')
        second = runner('prop25', 'a4.hm', '--json')
        assert first.stdout == second.stdout


class TestErrors:
    def test_parse_error(self, runner, tmp_path):
        path = tmp_path / 'broken.hm'
        path.write_text('field Q\nhopf H dim x\n', encoding='utf-8')
        result = runner('validate', str(path))
        assert result.exit_code == 2
        assert 'PARSE_ERROR' in result.stderr
        assert 'line 2, column 12' in result.stderr

    def test_parse_error_as_json(self, runner, tmp_path):
        path = tmp_path / 'broken.hm'
        path.write_text('hopf H dim 1\n', encoding='utf-8')
        result = runner('validate', str(path), '--json')
        payload = json.loads(result.stdout)
        assert result.exit_code == 2
        assert (payload['line'], payload['column']) == (1, 1)

    def test_unknown_module(self, runner):
        result = runner('certify-projective', 'a4.hm', '--module', 'Q9')
        assert result.exit_code == 2
        assert "unknown module 'Q9'" in result.stderr

    def test_missing_file(self, runner, tmp_path):
        result = runner('validate', str(tmp_path / 'none.hm'))
        assert result.exit_code == 2
        assert 'FILE_ERROR' in result.stderr

    @pytest.mark.parametrize('command,valid', [
        ('certify-projective', {'M': 'projective', 'M2': 'not-projective'}),
        ('coinvariants', {'A4': 'valid', 'M': 'valid', 'M2': 'valid'}),
    ])
    def test_invalid_module_is_reported_and_skipped(self, runner, tmp_path,
                                                   command, valid):
        path = tmp_path / 'mixed.hm'
        path.write_text(FixtureService.text('a4.hm') +
                        '\nmodule BAD over A4 dim 2\naction 1 1 1 1\n',
                        encoding='utf-8')
        result = runner(command, str(path), '--json')
        report = json.loads(result.stdout)
        verdicts = {r['object']: r['verdict'] for r in report['results']}
        bad = next(r for r in report['results'] if r['object'] == 'BAD')
        assert result.exit_code == 1
        assert verdicts == dict(valid, BAD='invalid')
        assert bad['diagnostics']

    def test_named_invalid_module_is_an_error(self, runner, tmp_path):
        path = tmp_path / 'mixed.hm'
        path.write_text(FixtureService.text('a4.hm') +
                        '\nmodule BAD over A4 dim 2\naction 1 1 1 1\n',
                        encoding='utf-8')
        result = runner('decompose', str(path), '--module', 'BAD')
        assert result.exit_code == 2
        assert 'INVALID_STRUCTURE' in result.stderr


class TestVerify:
    @pytest.mark.parametrize('args', [
        ('certify-projective', 'a4.hm'),
        ('certify-projective', 'hh.hm'),
        ('total-integral', 'a4.hm'),
        ('prop25', 'a4.hm'),
        ('prop25', 'kc2.hm'),
        ('h-simple', 'a4.hm'),
        ('h-simple', 'hh.hm'),
        ('h-simple', 'kc2f2.hm'),
        ('is-field', 'a4.hm'),
        ('decompose', 'hh.hm'),
        ('decompose', 'kc2f2.hm'),
        ('prop43', 'hh.hm'),
        ('coinvariants', 'kc2f2.hm'),
    ])
    def test_witnesses_replay(self, runner, tmp_path, args):
        produced = runner(*args, '--json')
        assert produced.exit_code in (0, 1)
        result = runner('verify', write_report(tmp_path, produced))
        assert result.exit_code == 0, result.stdout
        assert all(line.startswith('PASS ')
                   for line in result.stdout.splitlines())

    def test_tampered_section_fails(self, runner, tmp_path):
        produced = runner('certify-projective', 'a4.hm', '--module', 'M',
                          '--json')
        report = json.loads(produced.stdout)
        witness = report['results'][0]['witnesses'][0]
        section = witness['matrices']['section']
        section['entries'] = [['0'] * section['cols']
                              for _ in range(section['rows'])]
        path = tmp_path / 'tampered.json'
        path.write_text(json.dumps(report), encoding='utf-8')
        result = runner('verify', str(path))
        assert result.exit_code == 1
        assert result.stdout.startswith('FAIL M split-over-B')

    def test_certified_summands_replay_their_test(self, runner, tmp_path):
        produced = runner('decompose', 'hh.hm', '--module', 'HH2', '--json')
        result = runner('verify', write_report(tmp_path, produced))
        assert result.exit_code == 0
        assert result.stdout.count(
            'PASS HH2 simplicity via radical-and-endomorphisms') == 2

    def test_forged_single_summand_fails(self, runner, tmp_path):
        produced = runner('decompose', 'hh.hm', '--module', 'HH2', '--json')
        report = json.loads(produced.stdout)
        entry = report['results'][0]
        whole = {'cols': 4, 'rows': 4,
                 'entries': [['1' if i == j else '0' for j in range(4)]
                             for i in range(4)]}
        entry['details'].update(summands=1, dims=[4],
                                flags=['simple-certified'])
        entry['witnesses'] = [
            {'kind': 'decomposition', 'matrices': {'summand1': whole}},
            {'kind': 'simplicity', 'matrices': {'basis': whole},
             'context': 'summand1',
             'construction': 'radical-and-endomorphisms'},
        ]
        path = tmp_path / 'forged.json'
        path.write_text(json.dumps(report), encoding='utf-8')
        result = runner('verify', str(path))
        assert result.exit_code == 1
        assert 'PASS HH2 decomposition' in result.stdout
        assert 'FAIL HH2 simplicity via radical-and-endomorphisms' in \
            result.stdout

    def test_certified_flag_without_certificate_fails(self, runner,
                                                      tmp_path):
        produced = runner('decompose', 'hh.hm', '--module', 'HH2', '--json')
        report = json.loads(produced.stdout)
        entry = report['results'][0]
        entry['witnesses'] = [w for w in entry['witnesses']
                              if w['kind'] == 'decomposition']
        path = tmp_path / 'stripped.json'
        path.write_text(json.dumps(report), encoding='utf-8')
        result = runner('verify', str(path))
        assert result.exit_code == 1
        assert 'summand1 is simple-certified without a certificate' in \
            result.stdout

    @pytest.mark.parametrize('witnesses,line', [
        ([], 'FAIL A4 simplicity: simple verdict without a certificate'),
        ([{'kind': 'simplicity', 'matrices': {},
           'construction': 'operator-algebra'}],
         'FAIL A4 simplicity via operator-algebra'),
    ])
    def test_forged_simple_algebra_fails(self, runner, tmp_path, witnesses,
                                         line):
        produced = runner('h-simple', 'a4.hm', '--algebra', 'A4', '--json')
        report = json.loads(produced.stdout)
        entry = report['results'][0]
        entry.update(verdict='simple', witnesses=witnesses)
        entry['details'] = {'flag': 'simple-certified'}
        path = tmp_path / 'forged.json'
        path.write_text(json.dumps(report), encoding='utf-8')
        result = runner('verify', str(path))
        assert result.exit_code == 1
        assert line in result.stdout

    def test_nothing_to_replay(self, runner, tmp_path):
        produced = runner('validate', 'triv.hm', '--json')
        result = runner('verify', write_report(tmp_path, produced))
        assert result.exit_code == 0
        assert result.stdout == 'no witnesses to replay\n'

    def test_not_a_report(self, runner, tmp_path):
        path = tmp_path / 'bad.json'
        path.write_text('[1, 2]', encoding='utf-8')
        assert runner('verify', str(path)).exit_code == 2


class TestTools:
    def test_fixture_list(self, runner):
        result = runner('fixtures')
        assert result.exit_code == 0
        assert 'A4' in result.stdout
        assert 'SW4' in result.stdout

    def test_fixture_emit(self, runner):
        result = runner('fixtures', 'emit', 'M2')
        assert result.stdout == FixtureService.text('a4.hm')

    def test_unknown_fixture(self, runner):
        assert runner('fixtures', 'emit', 'NOPE').exit_code == 2

    @pytest.mark.parametrize('construction,dim', [
        ('double', 4),
        ('m-tensor-h', 4),
        ('hom-regular', 2),
        ('tensor-over-b', 2),
    ])
    def test_export_round_trips(self, runner, construction, dim):
        result = runner('export', 'a4.hm', '--module', 'M2',
                        '--construction', construction)
        assert result.exit_code == 0
        loaded = InstanceService.load_text(result.stdout)
        name = f"M2_{construction.replace('-', '_')}"
        assert loaded.diagnostics[name] == []
        assert loaded.modules[name].dim == dim

    def test_export_with_bmodule(self, runner):
        result = runner('export', 'a4.hm', '--module', 'M',
                        '--construction', 'tensor-over-b',
                        '--bmodule', 'BT')
        loaded = InstanceService.load_text(result.stdout)
        assert loaded.modules['M_tensor_over_b'].dim == 2
