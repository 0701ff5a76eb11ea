import sys
import click
from hopfsage.cli.common import instance_argument, load
from hopfsage.models.instance import InstanceFile
from hopfsage.services.adjunction_service import AdjunctionService
from hopfsage.services.fixture_service import FIXTURES, FixtureService
from hopfsage.services.hom_service import HomService
from hopfsage.services.instance_service import InstanceService
from hopfsage.services.relhopf_service import RelHopfService
from hopfsage.services.report_service import ReportService
from hopfsage.services.verification_service import VerificationService
from hopfsage.utils.decorators import handle_errors
from hopfsage.utils.errors import SemanticError
from hopfsage.utils.instance_format import serialize

CONSTRUCTIONS = ('tensor-over-b', 'm-tensor-h', 'hom-regular', 'double')


@click.command('verify')
@click.argument('report_path', metavar='REPORT',
                type=click.Path(exists=True, dir_okay=False))
@handle_errors
def verify(report_path):
    """Replay every witness of a JSON report."""
    with open(report_path, encoding='utf-8') as handle:
        report = ReportService.from_json(handle.read())
    replays = VerificationService.replay(report)
    if not replays:
        click.echo('no witnesses to replay')
    for replay in replays:
        click.echo(replay.line())
    sys.exit(VerificationService.exit_code(replays).value)


@click.group('fixtures', invoke_without_command=True)
@click.pass_context
def fixtures(ctx):
    """List the shipped fixtures."""
    if ctx.invoked_subcommand is not None:
        return
    for name, fixture in FIXTURES.items():
        click.echo(f"{name:<6} {fixture.filename:<10} {fixture.kind} "
                   f"{fixture.object}: {fixture.description}")


@fixtures.command('emit')
@click.argument('name')
@handle_errors
def emit_fixture(name):
    """Print the instance file a fixture lives in."""
    click.echo(FixtureService.text(FixtureService.fixture(name).filename),
               nl=False)


@click.command('export')
@instance_argument
@click.option('--module', 'module_name', required=True)
@click.option('--construction', type=click.Choice(CONSTRUCTIONS),
              required=True)
@click.option('--bmodule', 'bmodule_name', default=None,
              help='B-module for tensor-over-b (default: M^coH).')
@handle_errors
def export(path, module_name, construction, bmodule_name):
    """Write a module derived from MODULE as an instance file."""
    loaded = load(path)
    module = InstanceService.module(loaded, module_name)
    over = module.over
    name = f"{module_name}_{construction.replace('-', '_')}"
    if construction == 'tensor-over-b':
        bmodule = InstanceService.bmodule(loaded, bmodule_name) \
            if bmodule_name else RelHopfService.coinvariant_bmodule(module)
        if bmodule.over != over:
            raise SemanticError(f"'{bmodule.name}' is not over '{over.name}'")
        derived = AdjunctionService.tensor_over_B(over, bmodule).module
    elif construction == 'm-tensor-h':
        derived = AdjunctionService.m_tensor_H(module).module
    elif construction == 'hom-regular':
        derived = HomService.hom_from_regular(module)
    else:
        derived = RelHopfService.direct_sum([module, module])
    source = loaded.source
    algebra_block = source.find(over.name)
    blocks = [source.find(algebra_block.parent), algebra_block,
              InstanceService.module_block(derived, name)]
    click.echo(serialize(InstanceFile(source.field, blocks)), nl=False)
