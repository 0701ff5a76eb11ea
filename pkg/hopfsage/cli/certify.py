import time
import click
from hopfsage.cli.common import (algebra_option, certify_each, describe, emit,
                                 instance_argument, jobs_option, json_option,
                                 load, module_option, timing_option)
from hopfsage.services.projectivity_service import ProjectivityService
from hopfsage.services.report_service import ReportService
from hopfsage.utils.decorators import handle_errors


@click.command('certify-projective')
@instance_argument
@module_option
@jobs_option
@json_option
@timing_option
@handle_errors
def certify_projective(path, module_name, jobs, as_json, timing):
    """Certify projectivity of M^coH over B, with split witnesses."""
    started = time.perf_counter()
    loaded = load(path)
    results = certify_each(
        loaded, 'module', module_name, lambda m: ReportService.projectivity(
            ProjectivityService.certify_projectivity(m)), jobs)
    emit(describe('certify-projective', path, module=module_name),
         loaded, results, as_json, timing, started)


@click.command('total-integral')
@instance_argument
@algebra_option
@json_option
@timing_option
@handle_errors
def total_integral(path, algebra_name, as_json, timing):
    """Find a total integral H -> A and the exactness witnesses."""
    started = time.perf_counter()
    loaded = load(path)
    results = certify_each(
        loaded, 'algebra', algebra_name,
        lambda over: ReportService.total_integral(
            over.name, ProjectivityService.find_total_integral(over),
            ProjectivityService.exactness_witness(over)))
    emit(describe('total-integral', path, algebra=algebra_name),
         loaded, results, as_json, timing, started)


@click.command('prop25')
@instance_argument
@module_option
@jobs_option
@json_option
@timing_option
@handle_errors
def prop25(path, module_name, jobs, as_json, timing):
    """Check the chain of projectivity conditions for M^coH."""
    started = time.perf_counter()
    loaded = load(path)
    results = certify_each(
        loaded, 'module', module_name, lambda m: ReportService.chain(
            ProjectivityService.prop25_chain(m)), jobs)
    emit(describe('prop25', path, module=module_name),
         loaded, results, as_json, timing, started)
