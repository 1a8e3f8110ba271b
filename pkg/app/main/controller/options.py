"""Options shared by the commands"""
import json
from typing import Any, Callable

import click
from pydantic import BaseModel

from app.main.config import Config


def weight_options(func: Callable) -> Callable:
    """--type, --weight, --json and --cache-dir"""
    func = click.option('--cache-dir', default=None, help='Directory of the persistent KL cache')(func)
    func = click.option('--json', 'json_output', is_flag=True, help='Print JSON')(func)
    func = click.option('--weight', required=True, help='Weight such as "h0=-2,h1=-2,d=0"')(func)
    func = click.option('--type', 'cartan_type', default='A1~', show_default=True, help='Cartan type')(func)
    return func


def depth_options(func: Callable) -> Callable:
    func = click.option('--max-depth', default=Config.MAX_DEPTH, show_default=True, type=int,
                        help='Hard cap on --depth')(func)
    func = click.option('--depth', default=Config.DEFAULT_DEPTH, show_default=True, type=int,
                        help='Height of the truncation window')(func)
    return func


def emit(payload: Any, json_output: bool, text: str):
    if json_output:
        data = payload.model_dump(mode="json") if isinstance(payload, BaseModel) else payload
        click.echo(json.dumps(data, indent=2, sort_keys=True))
    else:
        click.echo(text)
