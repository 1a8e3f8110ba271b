"""Invariant checks package"""

# Import all checks to ensure registration
from . import affine_base
from . import integral_system
from . import coxeter_w
from . import kl_poly
from . import char_engine
from . import shapovalov_oracle

from .affine_base import AffineBaseCheck
from .integral_system import IntegralSystemCheck
from .coxeter_w import CoxeterCheck
from .kl_poly import KLPolynomialCheck
from .char_engine import CharacterEngineCheck
from .shapovalov_oracle import ShapovalovOracleCheck

__all__ = [
    'AffineBaseCheck',
    'IntegralSystemCheck',
    'CoxeterCheck',
    'KLPolynomialCheck',
    'CharacterEngineCheck',
    'ShapovalovOracleCheck',
]
