import time
import click
from hopfsage.cli.common import (certify_each, describe, emit,
                                 instance_argument, jobs_option, json_option,
                                 load, module_option, seed_option,
                                 timing_option)
from hopfsage.services.decomposition_service import DecompositionService
from hopfsage.services.report_service import ReportService
from hopfsage.utils.decorators import handle_errors


@click.command('decompose')
@instance_argument
@module_option
@seed_option
@jobs_option
@json_option
@timing_option
@handle_errors
def decompose(path, module_name, seed, jobs, as_json, timing):
    """Split modules into simple subobjects."""
    started = time.perf_counter()
    loaded = load(path)
    results = certify_each(
        loaded, 'module', module_name, lambda m: ReportService.decomposition(
            DecompositionService.decompose_semisimple(m, seed)), jobs)
    emit(describe('decompose', path, module=module_name, seed=seed),
         loaded, results, as_json, timing, started)


@click.command('prop43')
@instance_argument
@module_option
@jobs_option
@json_option
@timing_option
@handle_errors
def prop43(path, module_name, jobs, as_json, timing):
    """Split the generator epi A (x) V -> M when the exactness
    hypotheses are witnessed."""
    started = time.perf_counter()
    loaded = load(path)
    results = certify_each(
        loaded, 'module', module_name, lambda m: ReportService.prop43(
            DecompositionService.prop43_check(m)), jobs)
    emit(describe('prop43', path, module=module_name),
         loaded, results, as_json, timing, started)
