import click

from app.main.controller.options import emit, weight_options
from app.main.model.kl import KLTableSchema
from app.main.model.request import Subcommand, build_request
from app.main.service.coxeter_service import CoxeterSystem
from app.main.service.integral_service import compute_integral_system
from app.main.service.kl_service import get_kl_cache


@click.command()
@weight_options
@click.option('--length', default=4, show_default=True, type=int, help='Largest length of w')
def kl(cartan_type, weight, json_output, cache_dir, length):
    """Kazhdan-Lusztig polynomials of W(lambda) on the ball of the given length"""
    request = build_request(subcommand=Subcommand.KL, cartan_type=cartan_type, weight=weight,
                            json_output=json_output, cache_dir=cache_dir)
    system = compute_integral_system(request.parsed_weight(), request.cartan())
    coxeter = CoxeterSystem.from_integral_system(system)
    cache = get_kl_cache(coxeter, request.cache_dir)
    entries = cache.table(coxeter.ball(length))
    cache.flush()
    schema = KLTableSchema(cartan_type=request.cartan_type, weight=system.weight.format(),
                           system_key=coxeter.key, length=length, entries=entries)
    lines = [f"W(lambda) = {coxeter.key}, {len(entries)} pairs"]
    lines += [f"  P[{e.y_word},{e.w_word}] = {e.polynomial}  mu={e.mu}" for e in entries]
    emit(schema, json_output, "\n".join(lines))
