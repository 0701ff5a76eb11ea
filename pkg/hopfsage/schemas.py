from marshmallow import EXCLUDE, Schema, ValidationError, fields, post_load
from hopfsage.models.matrix import Matrix
from hopfsage.models.report import ObjectResult, Report, Witness
from hopfsage.utils.errors import HopfsageError
from hopfsage.utils.verdicts import Verdict, WitnessKind


class MatrixField(fields.Field):
    """Exact matrix as ``{"rows", "cols", "entries"}`` with string scalars.

    Loading needs the field of the instance in the schema context under
    ``"field"``.
    """

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        return {'rows': value.rows, 'cols': value.cols,
                'entries': value.to_strings()}

    def _deserialize(self, value, attr, data, **kwargs):
        field = self.context.get('field')
        if field is None:
            raise ValidationError('no field to read matrix entries in')
        if not isinstance(value, dict) or \
                not {'rows', 'cols', 'entries'} <= set(value):
            raise ValidationError('expected rows, cols and entries')
        rows, cols, entries = value['rows'], value['cols'], value['entries']
        if not isinstance(entries, list) or len(entries) != rows or \
                any(not isinstance(r, list) or len(r) != cols
                    for r in entries):
            raise ValidationError(f'entries do not form a {rows}x{cols} '
                                  f'matrix')
        try:
            return Matrix.from_rows(field, [[str(x) for x in r]
                                            for r in entries], cols)
        except HopfsageError as e:
            raise ValidationError(e.message)


class WitnessSchema(Schema):
    kind = fields.Enum(WitnessKind, by_value=True, required=True)
    matrices = fields.Dict(keys=fields.Str(), values=MatrixField(),
                           required=True)
    context = fields.Str(allow_none=True, load_default=None)
    construction = fields.Str(allow_none=True, load_default=None)

    @post_load
    def make_witness(self, data, **kwargs):
        return Witness(**data)


class ObjectResultSchema(Schema):
    object = fields.Str(required=True)
    kind = fields.Str(required=True)
    verdict = fields.Enum(Verdict, by_value=True, required=True)
    details = fields.Dict(keys=fields.Str(), values=fields.Raw(),
                          load_default=dict)
    witnesses = fields.List(fields.Nested(WitnessSchema), load_default=list)
    notes = fields.List(fields.Str(), load_default=list)
    diagnostics = fields.List(fields.Str(), load_default=list)

    @post_load
    def make_result(self, data, **kwargs):
        return ObjectResult(**data)


class ReportSchema(Schema):
    """Machine report; ``exit_code`` is written but recomputed on load."""

    class Meta:
        unknown = EXCLUDE

    command = fields.Str(required=True)
    field = fields.Str(required=True)
    instance = fields.Str(required=True)
    results = fields.List(fields.Nested(ObjectResultSchema), required=True)
    timing = fields.Float(allow_none=True, load_default=None)
    exit_code = fields.Function(lambda report: report.exit_code.value,
                                dump_only=True)

    @post_load
    def make_report(self, data, **kwargs):
        return Report(**data)
