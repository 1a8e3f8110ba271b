import json
import logging
import sys
import unittest
from typing import List, Optional

import click

from app import create_app
from app.main.config import Config
from app.main.service.kl_service import flush_all
from app.main.util.exceptions import KLCharacterError

logging.basicConfig(level=getattr(logging, Config.LOG_LEVEL.upper(), logging.WARNING),
                    format='%(asctime)s %(levelname)s %(name)s: %(message)s')
logger = logging.getLogger(__name__)


# Create a click group to act as our manager
@click.group()
def manager():
    """Kazhdan-Lusztig character calculator."""
    pass


@manager.command()
def test():
    """Runs the unit tests."""
    tests = unittest.TestLoader().discover('app/main/test', pattern='test*.py', top_level_dir='.')
    result = unittest.TextTestRunner(verbosity=2).run(tests)
    if result.wasSuccessful():
        return 0
    return 1


create_app(manager)


def run(argv: Optional[List[str]] = None) -> int:
    """Exit code 0 on success, 1 on usage errors, 2 on domain errors (JSON on stderr)"""
    try:
        result = manager.main(args=argv, prog_name='manage.py', standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return 1
    except click.ClickException as e:
        e.show()
        return 1
    except KLCharacterError as e:
        logger.debug(f"Domain error {e.code}: {e.message}")
        click.echo(json.dumps(e.to_dict()), err=True)
        return 2
    finally:
        flush_all()
    return result if isinstance(result, int) else 0


if __name__ == '__main__':
    sys.exit(run())
