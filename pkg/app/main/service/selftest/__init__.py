"""Self-test package initialization"""

# Import base classes
from .base.check import InvariantCheck
from .base.registry import CheckRegistry

# Import utilities
from .utils.ParameterValidator import ParameterValidator
from .utils.ResultBuilder import CaseCounter, ResultBuilder

# Import all checks to ensure they're registered
from . import checks

__all__ = [
    'InvariantCheck',
    'CheckRegistry',
    'CaseCounter',
    'ParameterValidator',
    'ResultBuilder',
]
