import click

from app.main.controller.options import emit, weight_options
from app.main.model.request import Subcommand, build_request
from app.main.service.integral_service import compute_integral_system, integral_system_schema


@click.command()
@weight_options
def integral(cartan_type, weight, json_output, cache_dir):
    """Integral root system, chamber and Coxeter matrix of a weight"""
    request = build_request(subcommand=Subcommand.INTEGRAL, cartan_type=cartan_type, weight=weight,
                            json_output=json_output, cache_dir=cache_dir)
    system = compute_integral_system(request.parsed_weight(), request.cartan())
    schema = integral_system_schema(system)
    lines = [
        f"type: {schema.cartan_type}",
        f"weight: {schema.weight}",
        f"level: {schema.level}",
        f"chamber: {schema.chamber}",
        f"finite: {schema.finite}",
        f"simples: {schema.simples}",
        f"delta0: {schema.delta0}",
        f"coxeter matrix: {schema.coxeter_matrix}",
    ]
    emit(schema, json_output, "\n".join(lines))
