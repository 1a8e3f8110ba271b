import click

from .main.controller import (
    character_controller, integral_controller, kl_controller, oracle_controller, selftest_controller
)


def create_app(group: click.Group) -> click.Group:
    """Attach the domain commands to the manager group"""
    group.add_command(integral_controller.integral)
    group.add_command(character_controller.char)
    group.add_command(character_controller.decomp)
    group.add_command(kl_controller.kl)
    group.add_command(oracle_controller.oracle)
    group.add_command(selftest_controller.selftest)
    return group
