"""Exception hierarchy shared by every service module.

All errors derive from ValueError so callers that only know the generic
failure contract keep working; ``to_dict`` gives the service-layer failure
shape used throughout the app.
"""
from typing import Any, Dict


class KLCharacterError(ValueError):
    """Base class for domain errors"""
    code = "error"

    def __init__(self, message: str = None):
        super().__init__(message or self.__class__.__doc__ or self.code)
        self.message = message or self.__class__.__doc__ or self.code

    def to_dict(self) -> Dict[str, Any]:
        return {"status": "fail", "error": self.code, "message": self.message}


class CriticalLevel(KLCharacterError):
    """Weight is at the critical level (delta, lambda+rho) = 0"""
    code = "CriticalLevel"


class BoundExceeded(KLCharacterError):
    """Self-verified height bound for the simple roots failed at the cap"""
    code = "BoundExceeded"


class ImaginaryCoroot(KLCharacterError):
    """Coroot of an imaginary root is undefined"""
    code = "ImaginaryCoroot"


class NotFinite(KLCharacterError):
    """Integral root system is infinite"""
    code = "NotFinite"


class NotApplicable(KLCharacterError):
    """Operation does not apply to this weight"""
    code = "NotApplicable"


class MixedSystems(KLCharacterError):
    """Elements belong to different Coxeter systems"""
    code = "MixedSystems"


class NotComparable(KLCharacterError):
    """Elements are not comparable in the Bruhat order"""
    code = "NotComparable"


class NotDominant(KLCharacterError):
    """Weight is not in the dominant chamber"""
    code = "NotDominant"


class BudgetExceeded(KLCharacterError):
    """Enumeration exceeded the configured orbit cap"""
    code = "BudgetExceeded"


class ChambersDiffer(KLCharacterError):
    """Weights lie in different chambers"""
    code = "ChambersDiffer"


class IntegralityMismatch(KLCharacterError):
    """Weights have different integral root systems"""
    code = "IntegralityMismatch"


class PreconditionViolated(KLCharacterError):
    """Translation preconditions do not hold"""
    code = "PreconditionViolated"


class NotDominantIntegral(KLCharacterError):
    """Weight is not dominant integral regular"""
    code = "NotDominantIntegral"


class DepthExceeded(KLCharacterError):
    """Requested depth exceeds the allowed maximum"""
    code = "DepthExceeded"


class UnknownCartanType(KLCharacterError):
    """Cartan type is not in the table"""
    code = "UnknownCartanType"


class UnsupportedType(KLCharacterError):
    """Operation is not available for this Cartan type"""
    code = "UnsupportedType"


class WeightSyntaxError(KLCharacterError):
    """Weight string does not match the grammar"""
    code = "WeightSyntaxError"
