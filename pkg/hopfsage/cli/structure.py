import time
import click
from hopfsage.cli.common import (algebra_option, certify_each, describe, emit,
                                 instance_argument, jobs_option, json_option,
                                 load, module_option, seed_option,
                                 timing_option)
from hopfsage.services.relhopf_service import RelHopfService
from hopfsage.services.report_service import ReportService
from hopfsage.services.simplicity_service import SimplicityService
from hopfsage.utils.decorators import handle_errors


@click.command('validate')
@instance_argument
@json_option
@timing_option
@handle_errors
def validate(path, as_json, timing):
    """Check every block of an instance against its axioms."""
    started = time.perf_counter()
    loaded = load(path)
    emit(describe('validate', path), loaded,
         ReportService.validation(loaded), as_json, timing, started)


@click.command('coinvariants')
@instance_argument
@module_option
@algebra_option
@json_option
@timing_option
@handle_errors
def coinvariants(path, module_name, algebra_name, as_json, timing):
    """Coinvariant subspaces of algebras and modules."""
    started = time.perf_counter()
    loaded = load(path)
    results = []
    if module_name is None:
        results += certify_each(
            loaded, 'algebra', algebra_name,
            lambda a: ReportService.coinvariants(a.name, 'algebra', a.coinv))
    if algebra_name is None:
        results += certify_each(
            loaded, 'module', module_name,
            lambda m: ReportService.coinvariants(m.name, 'module', m.coinv))
    emit(describe('coinvariants', path, module=module_name,
                  algebra=algebra_name),
         loaded, results, as_json, timing, started)


@click.command('h-simple')
@instance_argument
@algebra_option
@seed_option
@jobs_option
@json_option
@timing_option
@handle_errors
def h_simple(path, algebra_name, seed, jobs, as_json, timing):
    """Search for proper H-ideals of comodule algebras."""
    started = time.perf_counter()
    loaded = load(path)
    results = certify_each(
        loaded, 'algebra', algebra_name, lambda over: ReportService.h_simple(
            over.name, SimplicityService.is_H_simple(over, seed)), jobs)
    emit(describe('h-simple', path, algebra=algebra_name, seed=seed),
         loaded, results, as_json, timing, started)


@click.command('is-field')
@instance_argument
@algebra_option
@json_option
@timing_option
@handle_errors
def is_field(path, algebra_name, as_json, timing):
    """Decide whether the coinvariant subalgebra B is a field."""
    started = time.perf_counter()
    loaded = load(path)

    def field_test(over):
        coinvariant = RelHopfService.coinvariant_algebra(over)
        return ReportService.field_test(
            over.name, SimplicityService.is_field(coinvariant), coinvariant)

    results = certify_each(loaded, 'algebra', algebra_name, field_test)
    emit(describe('is-field', path, algebra=algebra_name),
         loaded, results, as_json, timing, started)
