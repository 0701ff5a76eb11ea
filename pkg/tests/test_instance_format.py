import pytest
from hopfsage.services.fixture_service import FIXTURES, FixtureService
from hopfsage.services.instance_service import InstanceService
from hopfsage.utils.errors import (InvalidStructureError, ParseError,
                                   SemanticError)
from hopfsage.utils.instance_format import parse, serialize

# the unit acts as zero on the second basis vector
UNIT_FREE_MODULE = '\nmodule BAD over A4 dim 2\naction 1 1 1 1\n'


class TestParse:
    def test_fixture_files_parse(self):
        for filename in FixtureService.filenames():
            instance = parse(FixtureService.text(filename))
            assert instance.blocks

    def test_field_header(self):
        assert str(parse('field F 5\n').field) == 'F_5'
        assert parse('field Q\n').field.characteristic == 0

    @pytest.mark.parametrize('text,line,column', [
        ('', 1, 1),
        ('# only a comment\n', 1, 1),
        ('hopf H dim 1\n', 1, 1),
        ('field F 4\n', 1, 9),
        ('field Q\nhopf H dim x\n', 2, 12),
        ('field Q\nunit 1 1\n', 2, 1),
        ('field Q\nhopf H dim 1\nunit 1\n', 3, 6),
        ('field Q\nhopf H dim 1\nunit 0 1\n', 3, 6),
        ('field Q\nhopf H dim 1\nunit 1 1/0\n', 3, 8),
        ('field Q\nhopf H dim 1\nfoo 1 1\n', 3, 1),
        ('field Q\nfield Q\n', 2, 1),
    ])
    def test_parse_errors_carry_position(self, text, line, column):
        with pytest.raises(ParseError) as info:
            parse(text)
        assert (info.value.line, info.value.column) == (line, column)

    def test_empty_file_message(self):
        with pytest.raises(ParseError) as info:
            parse('\n\n')
        assert 'empty instance file' in info.value.message

    def test_duplicate_entry(self):
        with pytest.raises(ParseError) as info:
            parse('field Q\nhopf H dim 1\nunit 1 1\nunit 1 2\n')
        assert info.value.line == 4

    def test_serialize_is_canonical(self):
        for filename in FixtureService.filenames():
            instance = parse(FixtureService.text(filename))
            text = serialize(instance)
            assert parse(text) == instance
            assert serialize(parse(text)) == text


class TestResolve:
    def test_unknown_parent(self):
        with pytest.raises(SemanticError) as info:
            InstanceService.load_text(
                'field Q\nmodule M over A dim 1\naction 1 1 1 1\n')
        assert "unknown algebra 'A'" in info.value.message

    def test_index_out_of_range(self):
        with pytest.raises(SemanticError):
            InstanceService.load_text('field Q\nhopf H dim 1\nunit 2 1\n')

    def test_duplicate_names(self):
        text = FixtureService.text('triv.hm') + '\nhopf K dim 1\n'
        with pytest.raises(SemanticError):
            InstanceService.load_text(text)

    def test_invalid_block_keeps_diagnostics(self):
        loaded = InstanceService.load_text('field Q\nhopf H dim 1\n')
        assert 'H' not in loaded.hopfs
        assert loaded.diagnostics['H']

    def test_invalid_parent_is_reported(self):
        loaded = InstanceService.load_text(
            'field Q\nhopf H dim 1\nalgebra A over H dim 1\n')
        assert loaded.diagnostics['A'][0].axiom == 'invalid parent'

    def test_lookup_of_wrong_kind(self, a4_instance):
        with pytest.raises(SemanticError):
            InstanceService.module(a4_instance, 'A4')
        assert InstanceService.select(a4_instance, 'module', None)[0].name \
            == 'M'

    def test_select_skips_invalid_objects(self):
        loaded = InstanceService.load_text(
            FixtureService.text('a4.hm') + UNIT_FREE_MODULE)
        selected = InstanceService.select(loaded, 'module', None)
        skipped = InstanceService.invalid(loaded, 'module', None)
        assert [m.name for m in selected] == ['M', 'M2']
        assert [b.name for b in skipped] == ['BAD']
        assert InstanceService.invalid(loaded, 'module', 'M') == []
        with pytest.raises(InvalidStructureError):
            InstanceService.select(loaded, 'module', 'BAD')


class TestFixtures:
    def test_every_fixture_object_is_valid(self):
        for name, fixture in FIXTURES.items():
            loaded, found = FixtureService.load(name)
            assert found.filename == fixture.filename
            assert loaded.diagnostics[fixture.object] == []

    def test_unknown_fixture(self):
        with pytest.raises(SemanticError):
            FixtureService.fixture('NOPE')

    def test_resolve_prefers_files_on_disk(self, tmp_path):
        path = tmp_path / 'a4.hm'
        path.write_text('field F 3\n', encoding='utf-8')
        assert FixtureService.resolve(str(path)) == 'field F 3\n'

    def test_resolve_falls_back_to_shipped_fixture(self, tmp_path):
        missing = tmp_path / 'hh.hm'
        assert FixtureService.resolve(str(missing)) == \
            FixtureService.text('hh.hm')

    def test_resolve_missing(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            FixtureService.resolve(str(tmp_path / 'nothing.hm'))
