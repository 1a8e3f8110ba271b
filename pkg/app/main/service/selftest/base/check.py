"""Base class for invariant checks"""
from abc import ABC, abstractmethod
from typing import Any, Dict, Optional

from app.main.model.selftest import CheckKind, CheckSettings


class InvariantCheck(ABC):
    """A check runs one module's invariants; ``settings`` fill in parameters the caller left out"""
    kind: Optional[CheckKind] = None

    def __init__(self, cache_dir: Optional[str] = None, settings: Optional[CheckSettings] = None):
        self.cache_dir = cache_dir
        self.settings = settings or CheckSettings()

    @abstractmethod
    def execute(self, parameters: Dict[str, Any]) -> Dict[str, Any]:
        """Run the check; returns a ResultBuilder payload"""
        pass

    @abstractmethod
    def validate_parameters(self, parameters: Dict[str, Any]) -> Dict[str, Any]:
        pass
