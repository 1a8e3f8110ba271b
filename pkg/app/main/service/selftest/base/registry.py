"""Registry of invariant checks, filled when the checks package is imported"""
from typing import Dict, List, Type, Union

from app.main.model.selftest import CheckKind
from .check import InvariantCheck


class CheckRegistry:
    """One check class per CheckKind"""
    _checks: Dict[CheckKind, Type[InvariantCheck]] = {}

    @classmethod
    def register(cls, kind: CheckKind):
        """Class decorator; a kind can only be claimed by one check"""
        def decorator(check_class: Type[InvariantCheck]):
            existing = cls._checks.get(kind)
            if existing is not None and existing is not check_class:
                raise ValueError(f"{kind.value} is already checked by {existing.__name__}")
            check_class.kind = kind
            cls._checks[kind] = check_class
            return check_class
        return decorator

    @classmethod
    def get_check(cls, kind: Union[CheckKind, str]) -> Type[InvariantCheck]:
        try:
            return cls._checks[CheckKind(kind)]
        except (KeyError, ValueError):
            raise ValueError(f"No check registered for kind: {kind}") from None

    @classmethod
    def kinds(cls) -> List[CheckKind]:
        """Registered kinds in module order"""
        return [kind for kind in CheckKind if kind in cls._checks]
