import click

from app.main.controller.options import emit
from app.main.model.selftest import CheckKind
from app.main.service.selftest import ResultBuilder
from app.main.service.selftest_service import run_selftest


@click.command()
@click.option('--check', 'checks', multiple=True, type=click.Choice([k.value for k in CheckKind]),
              help='Run only these checks')
@click.option('--depth', default=None, type=int, help='Character depth for the checks')
@click.option('--json', 'json_output', is_flag=True, help='Print JSON')
@click.option('--cache-dir', default=None, help='Directory of the persistent KL cache')
def selftest(checks, depth, json_output, cache_dir):
    """Run the invariant checks of every module"""
    parameters = {} if depth is None else {'depth': depth}
    report = run_selftest([CheckKind(c) for c in checks] or None, parameters, cache_dir)
    lines = [f"{r.kind.value:20s} {'ok' if r.passed else 'FAIL'}  {r.cases} cases  {r.seconds}s"
             for r in report.results]
    for r in report.results:
        lines += [f"  {r.kind.value}: {message}" for message in r.failures]
    lines.append(ResultBuilder.build_summary([r.model_dump(mode="json") for r in report.results])["message"])
    emit(report, json_output, "\n".join(lines))
    if not report.passed:
        raise click.exceptions.Exit(3)
