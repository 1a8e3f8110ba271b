import click

from app.main.controller.options import emit, weight_options
from app.main.model.request import Subcommand, build_request
from app.main.service.shapovalov_service import oracle_report


def _parse_xi(text: str):
    try:
        return tuple(int(n) for n in text.split(","))
    except ValueError:
        raise click.BadParameter(f"'{text}' is not a comma-separated list of integers", param_hint='--xi')


@click.command()
@weight_options
@click.option('--xi', required=True, help='Root coordinates "n0,n1" of lambda - mu')
def oracle(cartan_type, weight, json_output, cache_dir, xi):
    """Shapovalov form on M(lambda)_{lambda - xi}: size, rank and determinant"""
    request = build_request(subcommand=Subcommand.ORACLE, cartan_type=cartan_type, weight=weight,
                            json_output=json_output, cache_dir=cache_dir)
    report = oracle_report(request.parsed_weight(), _parse_xi(xi), request.cartan())
    text = f"size {report.size}, rank {report.rank}, determinant {report.determinant}"
    emit(report, json_output, text)
