import csv
import io
import json

import pytest

from src.cyclic_descents.cli import cli
from src.cyclic_descents.necklace import Word, enumerate_N_lambda, ppat, require_N_lambda
from src.cyclic_descents.perm_core import (
    Composition,
    Permutation,
    enumerate_cyclic_lambda_unimodal,
    enumerate_lambda_unimodal,
    is_cyclic,
)


def lines(result):
    return result.output.splitlines()


class TestEnumerate:
    def test_trivial_composition(self, runner):
        result = runner.invoke(cli, ['enumerate', '--lambda', '1'])
        assert result.exit_code == 0
        assert result.output == "1\n"

    def test_cyclic_contains_figure_permutation(self, runner):
        result = runner.invoke(cli, ['enumerate', '--lambda', '3,6', '--set', 'cyclic'])
        assert result.exit_code == 0
        assert "782134965" in lines(result)

    def test_necklaces(self, runner):
        result = runner.invoke(cli, ['enumerate', '--lambda', '4,1', '--set', 'necklace', '--m', '2'])
        assert result.exit_code == 0
        assert "00121" in lines(result)

    def test_csv_header(self, runner):
        result = runner.invoke(cli, ['enumerate', '--lambda', '3', '--format', 'csv'])
        assert result.exit_code == 0
        assert lines(result) == ["index,object,descent_set,outside", "1,231,2,1"]

    def test_json_rows(self, runner):
        result = runner.invoke(cli, ['enumerate', '--lambda', '2', '--set', 'necklace', '--format', 'json'])
        assert result.exit_code == 0
        rows = [json.loads(line) for line in lines(result)]
        assert rows
        assert all(row['lambda'] == '2' and row['image'] == '21' for row in rows)

    def test_unimodal_filtered_by_m(self, runner):
        result = runner.invoke(cli, ['enumerate', '--lambda', '3', '--set', 'unimodal', '--m', '2'])
        assert result.exit_code == 0
        assert lines(result) == ["321"]

    def test_bad_composition(self, runner):
        result = runner.invoke(cli, ['enumerate', '--lambda', '0,2'])
        assert result.exit_code == 2

    def test_m_out_of_range(self, runner):
        result = runner.invoke(cli, ['enumerate', '--lambda', '2,1', '--m', '9'])
        assert result.exit_code == 2

    def test_out_file(self, runner):
        with runner.isolated_filesystem():
            result = runner.invoke(cli, ['enumerate', '--lambda', '3', '--out', 'cycles.txt'])
            assert result.exit_code == 0
            with open('cycles.txt', encoding='utf-8') as f:
                assert f.read() == "231\n"

    @pytest.mark.parametrize("text,set_name,source", [
        ('4,6', 'cyclic', enumerate_cyclic_lambda_unimodal),
        ('10', 'unimodal', enumerate_lambda_unimodal),
    ])
    def test_ten_letter_permutations_parse_back(self, runner, text, set_name, source):
        lam = Composition.parse(text)
        result = runner.invoke(cli, ['enumerate', '--lambda', text, '--set', set_name])
        assert result.exit_code == 0
        parsed = [Permutation.parse(line) for line in lines(result)]
        assert all(',' in line for line in lines(result))
        assert [p.to_text() for p in parsed] == lines(result)
        assert parsed == list(source(lam))
        if set_name == 'cyclic':
            assert all(is_cyclic(p) for p in parsed)

    def test_wide_alphabet_necklaces_parse_back(self, runner):
        lam = Composition((1, 1, 1, 1, 1, 1))
        result = runner.invoke(cli, ['enumerate', '--lambda', '1,1,1,1,1,1', '--set', 'necklace',
                                     '--m', '0', '--format', 'json'])
        assert result.exit_code == 0
        rows = [json.loads(line) for line in lines(result)]
        assert len(rows) == 120
        words = [Word.parse(row['object'], 6) for row in rows]
        assert all(',' in row['object'] for row in rows)
        assert [w.to_text() for w in words] == [row['object'] for row in rows]
        assert words == [member.word for member in enumerate_N_lambda(lam, 0)]
        for word, row in zip(words, rows):
            assert ppat(require_N_lambda(word, lam)) == Permutation.parse(row['image'])

    def test_ten_letter_necklace_image_parses_back(self, runner):
        result = runner.invoke(cli, ['enumerate', '--lambda', '10', '--set', 'necklace', '--m', '1',
                                     '--format', 'csv'])
        assert result.exit_code == 0
        rows = list(csv.DictReader(io.StringIO(result.output)))
        assert len(rows) == 1
        assert rows[0]['object'] == "0000000001"
        image = Permutation.parse(rows[0]['image'])
        assert image.to_text() == rows[0]['image']
        assert image.n == 10
        assert is_cyclic(image)

    def test_ignores_bad_jobs_environment(self, runner, monkeypatch):
        monkeypatch.setenv("CYCLIC_DESCENTS_JOBS", "0")
        result = runner.invoke(cli, ['enumerate', '--lambda', '1'])
        assert result.exit_code == 0
        assert result.output == "1\n"


class TestPPat:
    def test_worked_example(self, runner):
        result = runner.invoke(cli, ['ppat', '--lambda', '3,6', '--word', '321132202'])
        assert result.exit_code == 0
        assert lines(result) == ["pattern: 953286417", "image:   782134965"]

    def test_square_example_json(self, runner):
        result = runner.invoke(cli, ['ppat', '--lambda', '4,4', '--word', '02210221', '--format', 'json'])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data['pattern'] == '17532864'
        assert data['image'] == '78213456'

    def test_primitivity_failure(self, runner):
        result = runner.invoke(cli, ['ppat', '--lambda', '4,4', '--word', '00220022'])
        assert result.exit_code == 3
        assert "primitivity" in result.output

    def test_content_failure(self, runner):
        result = runner.invoke(cli, ['ppat', '--lambda', '4,4', '--word', '02220222'])
        assert result.exit_code == 3
        assert "content" in result.output

    def test_alphabet_failure(self, runner):
        result = runner.invoke(cli, ['ppat', '--lambda', '2', '--word', '05'])
        assert result.exit_code == 3
        assert "alphabet" in result.output


class TestChar:
    def test_chi_table(self, runner):
        result = runner.invoke(cli, ['char', '--chi', '--n', '4'])
        assert result.exit_code == 0
        assert [line.split() for line in lines(result)] == [
            ['4', '0'], ['3,1', '0'], ['2,2', '-2'], ['2,1,1', '0'], ['1,1,1,1', '6'],
        ]

    def test_single_irreducible_value(self, runner):
        result = runner.invoke(cli, ['char', '--irreducible', '--shape', '2,1', '--class', '1,1,1'])
        assert result.exit_code == 0
        assert result.output == "2\n"

    def test_single_irreducible_value_json(self, runner):
        result = runner.invoke(cli, ['char', '--irreducible', '--shape', '2,1', '--class', '1,1,1',
                                     '--format', 'json'])
        assert result.exit_code == 0
        assert json.loads(result.output) == {'shape': '2,1', 'class': '1,1,1', 'value': '2'}

    def test_irreducible_table_json(self, runner):
        result = runner.invoke(cli, ['char', '--irreducible', '--n', '3', '--format', 'json'])
        assert result.exit_code == 0
        table = json.loads(result.output)
        assert table['2,1'] == {'3': '-1', '2,1': '0', '1,1,1': '2'}

    def test_multiplicities_json(self, runner):
        result = runner.invoke(cli, ['char', '--mult', '--n', '3', '--format', 'json'])
        assert result.exit_code == 0
        assert json.loads(result.output) == {'3': '0', '2,1': '1', '1,1,1': '0'}

    def test_usage_errors(self, runner):
        assert runner.invoke(cli, ['char', '--n', '3']).exit_code == 2
        assert runner.invoke(cli, ['char', '--chi']).exit_code == 2
        assert runner.invoke(cli, ['char', '--irreducible', '--shape', '2,1', '--class', '2']).exit_code == 2
        assert runner.invoke(cli, ['char', '--irreducible', '--shape', '1,2']).exit_code == 2


class TestVerify:
    def test_main_theorem_json(self, runner):
        result = runner.invoke(cli, [
            'verify', '--identity', 'main', '--lambda', '2,3', '--format', 'json', '--no-cache', '--no-timings',
        ])
        assert result.exit_code == 0
        report = json.loads(result.output.strip())
        assert report['params'] == {'lambda': '2,3'}
        assert report['lhs'] == report['rhs'] == '0'
        assert report['pass'] is True
        assert 'ms' not in report

    def test_all_small(self, runner):
        result = runner.invoke(cli, ['verify', '--all', '--n-max', '3', '--no-cache'])
        assert result.exit_code == 0
        assert lines(result)[-1].startswith("✓")

    def test_needs_identity(self, runner):
        result = runner.invoke(cli, ['verify', '--n-max', '3'])
        assert result.exit_code == 2

    def test_unknown_identity(self, runner):
        result = runner.invoke(cli, ['verify', '--identity', 'bogus'])
        assert result.exit_code == 2

    def test_cached_rerun_is_identical(self, runner):
        with runner.isolated_filesystem():
            args = ['verify', '--identity', 'main', '--identity', 'rsk', '--n-max', '4',
                    '--cache-dir', 'cache', '--format', 'json']
            first = runner.invoke(cli, args)
            second = runner.invoke(cli, args)
            assert first.exit_code == second.exit_code == 0
            assert first.output == second.output

    def test_out_writes_jsonl(self, runner):
        with runner.isolated_filesystem():
            result = runner.invoke(cli, [
                'verify', '--identity', 'rsk', '--n-max', '3', '--no-cache', '--no-timings', '--out', 'r.jsonl',
            ])
            assert result.exit_code == 0
            with open('r.jsonl', encoding='utf-8') as f:
                reports = [json.loads(line) for line in f]
            assert [r['params'] for r in reports] == [{'n': 1}, {'n': 2}, {'n': 3}]
            assert all(r['pass'] for r in reports)

    def test_version(self, runner):
        result = runner.invoke(cli, ['--version'])
        assert result.exit_code == 0
        assert "1.0.0" in result.output

    def test_bad_jobs_environment(self, runner, monkeypatch):
        monkeypatch.setenv("CYCLIC_DESCENTS_JOBS", "many")
        result = runner.invoke(cli, ['verify', '--identity', 'main', '--n-max', '2', '--no-cache'])
        assert result.exit_code == 2

    def test_bad_log_level_environment(self, runner, monkeypatch):
        monkeypatch.setenv("CYCLIC_DESCENTS_LOG_LEVEL", "LOUD")
        result = runner.invoke(cli, ['char', '--chi', '--n', '3'])
        assert result.exit_code == 2

    def test_jobs_flag_wins_over_bad_environment(self, runner, monkeypatch):
        monkeypatch.setenv("CYCLIC_DESCENTS_JOBS", "abc")
        result = runner.invoke(cli, ['verify', '--identity', 'main', '--n-max', '2', '--jobs', '2', '--no-cache'])
        assert result.exit_code == 0
