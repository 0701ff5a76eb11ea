import json
from typing import Dict, List, Optional
from jinja2 import Environment, StrictUndefined
from marshmallow import ValidationError
from hopfsage.models.certificate import (ChainReport, Decomposition,
                                         FieldResult, Prop43Report,
                                         ProjectivityCertificate,
                                         SimplicityResult, SplitWitness,
                                         TotalIntegral)
from hopfsage.models.comodule import Subspace
from hopfsage.models.hopf import FinAlgebra
from hopfsage.models.instance import Block, LoadedInstance
from hopfsage.models.matrix import Matrix
from hopfsage.models.report import ObjectResult, Report, Witness
from hopfsage.schemas import ReportSchema
from hopfsage.utils.errors import SemanticError
from hopfsage.utils.instance_format import parse
from hopfsage.utils.verdicts import (ExactnessWitness, SimplicityFlag,
                                     Verdict, WitnessKind)

TEXT_TEMPLATE = """\
{{ report.command }} over {{ report.field }}
{% for result in report.results %}

{{ result.kind }} {{ result.object }}: {{ result.verdict.value }}
{% for key, value in result.details | dictsort %}
  {{ key }}: {{ value | show }}
{% endfor %}
{% for diagnostic in result.diagnostics %}
  diagnostic: {{ diagnostic }}
{% endfor %}
{% for note in result.notes %}
  note: {{ note }}
{% endfor %}
{% for witness in result.witnesses %}
  witness {{ witness.kind.value }}
{%- if witness.context %} ({{ witness.context }}){% endif %}
{%- if witness.construction %} via {{ witness.construction }}{% endif %}

{% for name, matrix in witness.matrices | dictsort %}
    {{ name }} [{{ matrix.rows }}x{{ matrix.cols }}]
{% for row in matrix.to_strings() %}
      {{ row | join(' ') }}
{% endfor %}
{% endfor %}
{% endfor %}
{% endfor %}
{% if report.timing is not none %}

timing: {{ '%.3f' | format(report.timing) }}s
{% endif %}

exit status: {{ report.exit_code.value }}

instance:
{{ report.instance | indent(2, true) }}
"""

# (witness key of a chain report, construction the verifier rebuilds)
CHAIN_WITNESSES = {
    'free_split': (WitnessKind.SPLIT_IN_CATEGORY, 'lift'),
    'generated_split': (WitnessKind.SPLIT_IN_CATEGORY, 'canonical'),
    'generated_split_tensor': (WitnessKind.SPLIT_IN_CATEGORY,
                               'canonical-tensor'),
    'b_projective': (WitnessKind.SPLIT_OVER_B, None),
}


def _show(value) -> str:
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if isinstance(value, (list, tuple)):
        return ', '.join(str(v) for v in value) or '(none)'
    return str(value)


_env = Environment(trim_blocks=True, lstrip_blocks=True,
                   keep_trailing_newline=True, undefined=StrictUndefined)
_env.filters['show'] = _show
_template = _env.from_string(TEXT_TEMPLATE)


class ReportService:
    """Turn certificates into reports and reports into text or JSON."""

    @staticmethod
    def report(command: str, loaded: LoadedInstance,
               results: List[ObjectResult],
               timing: Optional[float] = None) -> Report:
        return Report(command, str(loaded.field), loaded.text, results,
                      timing)

    @staticmethod
    def split(witness: SplitWitness, kind: WitnessKind,
              construction: Optional[str] = None) -> Witness:
        return Witness(kind, {'epi': witness.epi,
                              'section': witness.section},
                       context=witness.context.value,
                       construction=construction)

    # one converter per command

    @staticmethod
    def validation(loaded: LoadedInstance) -> List[ObjectResult]:
        results = []
        for block in loaded.source.blocks:
            problems = loaded.diagnostics.get(block.name, [])
            results.append(ObjectResult(
                block.name, block.kind,
                Verdict.INVALID if problems else Verdict.VALID,
                details={'dim': block.dim},
                diagnostics=[str(d) for d in problems]))
        return results

    @staticmethod
    def skipped(loaded: LoadedInstance,
                blocks: List[Block]) -> List[ObjectResult]:
        """Invalid results for objects a command could not evaluate."""
        results = []
        for block in blocks:
            problems = loaded.diagnostics.get(block.name, [])
            results.append(ObjectResult(
                block.name, block.kind, Verdict.INVALID,
                details={'dim': block.dim},
                diagnostics=[str(d) for d in problems]))
        return results

    @staticmethod
    def coinvariants(name: str, kind: str, subspace: Subspace) -> ObjectResult:
        return ObjectResult(
            name, kind, Verdict.VALID, details={'dim': subspace.dim},
            witnesses=[Witness(WitnessKind.COINVARIANTS,
                               {'basis': subspace.basis})])

    @staticmethod
    def projectivity(certificate: ProjectivityCertificate) -> ObjectResult:
        result = ObjectResult(
            certificate.module, 'module', certificate.verdict,
            details={'u_bijective': certificate.u_bijective,
                     'index_bound': certificate.index_bound},
            notes=list(certificate.notes))
        split = ReportService.split
        if certificate.b_witness is not None:
            result.witnesses.append(
                split(certificate.b_witness, WitnessKind.SPLIT_OVER_B))
        if certificate.category_witness is not None:
            result.witnesses.append(split(certificate.category_witness,
                                          WitnessKind.SPLIT_IN_CATEGORY,
                                          'lift'))
        if certificate.descended_witness is not None:
            result.witnesses.append(split(certificate.descended_witness,
                                          WitnessKind.DESCENDED_SPLIT,
                                          'lift'))
        if certificate.converse_witness is not None:
            result.witnesses.append(split(certificate.converse_witness,
                                          WitnessKind.DESCENDED_SPLIT,
                                          'canonical'))
        return result

    @staticmethod
    def total_integral(name: str, integral: Optional[TotalIntegral],
                       exactness: Dict[ExactnessWitness, Matrix]
                       ) -> ObjectResult:
        result = ObjectResult(
            name, 'algebra',
            Verdict.EXISTS if integral is not None else Verdict.NONE,
            details={'exactness': sorted(w.value for w in exactness)})
        if integral is not None:
            result.witnesses.append(Witness(WitnessKind.TOTAL_INTEGRAL,
                                            {'map': integral.map}))
        if ExactnessWitness.COSEMISIMPLE in exactness:
            result.witnesses.append(Witness(
                WitnessKind.COSEMISIMPLE_INTEGRAL,
                {'integral': exactness[ExactnessWitness.COSEMISIMPLE]}))
        return result

    @staticmethod
    def chain(report: ChainReport) -> ObjectResult:
        result = ObjectResult(
            report.module, 'module',
            Verdict.HOLDS if report.implications_hold else Verdict.FAILS,
            details={'free_split': report.free_split,
                     'generated_split': report.generated_split,
                     'b_projective': report.b_projective,
                     'exactness': [w.value for w in report.exactness]},
            notes=list(report.notes))
        for key in sorted(report.witnesses):
            kind, construction = CHAIN_WITNESSES[key]
            result.witnesses.append(ReportService.split(
                report.witnesses[key], kind, construction))
        return result

    @staticmethod
    def h_simple(name: str, simplicity: SimplicityResult) -> ObjectResult:
        result = ObjectResult(name, 'algebra', simplicity.verdict,
                              notes=list(simplicity.notes))
        if simplicity.flag is not None:
            result.details['flag'] = simplicity.flag.value
        if simplicity.witness is not None:
            result.details['ideal_dim'] = simplicity.witness.dim
            result.witnesses.append(Witness(
                WitnessKind.H_IDEAL, {'basis': simplicity.witness.basis}))
        if simplicity.route is not None:
            result.witnesses.append(Witness(
                WitnessKind.SIMPLICITY, {},
                construction=simplicity.route.value))
        return result

    @staticmethod
    def field_test(name: str, test: FieldResult,
                   coinvariant: FinAlgebra) -> ObjectResult:
        result = ObjectResult(name, 'algebra', test.verdict,
                              details={'coinvariant_dim': coinvariant.dim},
                              notes=list(test.notes))
        if test.element is not None:
            element = Matrix.column_vector(coinvariant.field, test.element)
            polynomial = Matrix.row_vector(coinvariant.field,
                                           test.polynomial)
            result.details['degree'] = len(test.polynomial) - 1
            result.witnesses.append(Witness(
                WitnessKind.MINIMAL_POLYNOMIAL,
                {'element': element, 'polynomial': polynomial}))
        return result

    @staticmethod
    def decomposition(decomposition: Decomposition) -> ObjectResult:
        flags = [s.flag for s in decomposition.summands]
        if not decomposition.complete:
            verdict = Verdict.FAILS
        elif all(f == SimplicityFlag.CERTIFIED for f in flags):
            verdict = Verdict.HOLDS
        else:
            verdict = Verdict.UNKNOWN
        result = ObjectResult(
            decomposition.module, 'module', verdict,
            details={'summands': len(decomposition.summands),
                     'complete': decomposition.complete,
                     'flags': [f.value for f in flags],
                     'dims': [s.subspace.dim
                              for s in decomposition.summands],
                     'hypotheses_failed': list(decomposition.hypotheses)},
            notes=list(decomposition.notes))
        if decomposition.summands:
            result.witnesses.append(Witness(
                WitnessKind.DECOMPOSITION,
                {f"summand{i + 1}": s.subspace.basis
                 for i, s in enumerate(decomposition.summands)}))
        for i, summand in enumerate(decomposition.summands):
            if summand.flag == SimplicityFlag.CERTIFIED:
                result.witnesses.append(Witness(
                    WitnessKind.SIMPLICITY,
                    {'basis': summand.subspace.basis},
                    context=f"summand{i + 1}",
                    construction=summand.route.value))
        return result

    @staticmethod
    def prop43(report: Prop43Report) -> ObjectResult:
        result = ObjectResult(
            report.module, 'module', report.verdict,
            details={'dagger': [w.value for w in report.dagger],
                     'exactness': [w.value for w in report.exactness]},
            notes=list(report.notes))
        if report.witness is not None:
            result.witnesses.append(ReportService.split(
                report.witness, WitnessKind.SPLIT_IN_CATEGORY, 'generator'))
        return result

    # output

    @staticmethod
    def render_text(report: Report) -> str:
        return _template.render(report=report)

    @staticmethod
    def to_json(report: Report) -> str:
        return json.dumps(ReportSchema().dump(report), indent=2,
                          sort_keys=True) + '\n'

    @staticmethod
    def from_json(text: str) -> Report:
        """Load a machine report, reading its matrices over the field of
        the embedded instance."""
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as e:
            raise SemanticError(f"report is not JSON: {e.msg}")
        if not isinstance(raw, dict) or \
                not isinstance(raw.get('instance'), str):
            raise SemanticError("report has no embedded instance")
        field = parse(raw['instance']).field
        try:
            return ReportSchema(context={'field': field}).load(raw)
        except ValidationError as e:
            raise SemanticError(f"malformed report: {e.messages}")
