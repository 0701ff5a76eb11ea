import sys
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar
import click
from hopfsage.config import current_config
from hopfsage.models.instance import LoadedInstance
from hopfsage.models.report import ObjectResult
from hopfsage.services.fixture_service import FixtureService
from hopfsage.services.instance_service import InstanceService
from hopfsage.services.report_service import ReportService
from hopfsage.utils.logging import logger

T = TypeVar('T')

json_option = click.option('--json', 'as_json', is_flag=True,
                           help='Write the machine (JSON) report.')
timing_option = click.option('--timing', is_flag=True,
                             help='Add wall-clock time to the report.')
seed_option = click.option('--seed', type=int, default=None,
                           help='Seed for random seed vectors over Q.')
jobs_option = click.option('--jobs', type=click.IntRange(min=1),
                           default=None,
                           help='Certify independent objects in parallel.')
module_option = click.option('--module', 'module_name', default=None,
                             help='Only this module (default: all).')
algebra_option = click.option('--algebra', 'algebra_name', default=None,
                              help='Only this algebra (default: all).')
instance_argument = click.argument('path', metavar='INSTANCE')


def load(path: str) -> LoadedInstance:
    """Parse and validate an instance file or a shipped fixture."""
    return InstanceService.load_text(FixtureService.resolve(path))


def describe(command: str, path: str, **flags) -> str:
    """Command echo for the report, independent of the working directory."""
    words = [command, path.replace('\\', '/').rsplit('/', 1)[-1]]
    for flag, value in sorted(flags.items()):
        if value is None or value is False:
            continue
        words.append(f"--{flag.replace('_', '-')}")
        if value is not True:
            words.append(str(value))
    return ' '.join(words)


def run_each(objects: Sequence[T], work: Callable[[T], ObjectResult],
             jobs: Optional[int] = None) -> List[ObjectResult]:
    """Evaluate objects independently; results come back sorted by name."""
    jobs = jobs or current_config().JOBS
    if jobs > 1 and len(objects) > 1:
        logger.debug(f"certifying {len(objects)} objects on {jobs} workers")
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            results = list(executor.map(work, objects))
    else:
        results = [work(obj) for obj in objects]
    return sorted(results, key=lambda r: r.object)


def certify_each(loaded: LoadedInstance, kind: str, name: Optional[str],
                 work: Callable[[T], ObjectResult],
                 jobs: Optional[int] = None) -> List[ObjectResult]:
    """run_each over the selected objects, plus an invalid result for every
    object of the kind that failed validation."""
    results = run_each(InstanceService.select(loaded, kind, name), work, jobs)
    results += ReportService.skipped(
        loaded, InstanceService.invalid(loaded, kind, name))
    return sorted(results, key=lambda r: r.object)


def emit(command: str, loaded: LoadedInstance, results: List[ObjectResult],
         as_json: bool, timing: bool, started: float):
    """Print the report and exit with its status."""
    elapsed = time.perf_counter() - started
    logger.info(f"{command}: {len(results)} result(s) in {elapsed:.3f}s")
    report = ReportService.report(command, loaded, results,
                                  elapsed if timing else None)
    if as_json:
        click.echo(ReportService.to_json(report), nl=False)
    else:
        click.echo(ReportService.render_text(report), nl=False)
    sys.exit(report.exit_code.value)
