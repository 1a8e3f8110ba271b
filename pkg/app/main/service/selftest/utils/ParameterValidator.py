from typing import Any, Dict

from app.main.config import Config, OracleConfig
from app.main.model.selftest import CheckSettings

MAX_BALL_LENGTH = 12


class ParameterValidator:
    """Validates and normalizes check parameters using configuration"""

    @staticmethod
    def clamp(value: Any, low: int, high: int, default: int) -> int:
        """Integer in [low, high]; anything unparsable falls back to default"""
        if isinstance(value, int):
            return max(low, min(value, high))
        if isinstance(value, str) and value.isdigit():
            return max(low, min(int(value), high))
        return default

    @staticmethod
    def validate_base_parameters(parameters: Dict[str, Any], settings: CheckSettings) -> Dict[str, Any]:
        """
        Validate the parameters every check shares.

        Args:
            parameters: Input parameters from the caller
            settings: Defaults for anything the caller left out

        Returns:
            Dict with validated parameters including:
                - depth: character depth, at most Config.MAX_DEPTH
                - max_length: Coxeter ball length
                - types: Cartan type names to sweep
        """
        depth_default = min(settings.depth, Config.MAX_DEPTH)
        depth = ParameterValidator.clamp(parameters.get('depth', depth_default),
                                         0, Config.MAX_DEPTH, depth_default)
        length_default = min(settings.max_length, MAX_BALL_LENGTH)
        max_length = ParameterValidator.clamp(parameters.get('max_length', length_default),
                                              0, MAX_BALL_LENGTH, length_default)
        types = parameters.get('types', settings.types)
        if isinstance(types, str):
            types = [t for t in types.split(',') if t]
        if not isinstance(types, list) or not types:
            types = list(settings.types) or ['A1~']
        return {
            'depth': depth,
            'max_length': max_length,
            'types': [str(t) for t in types],
        }

    @staticmethod
    def validate_oracle_height(value: Any, default: int = 3) -> int:
        """Oracle heights stay within OracleConfig.MAX_HEIGHT"""
        return ParameterValidator.clamp(value, 0, OracleConfig.MAX_HEIGHT, min(default, OracleConfig.MAX_HEIGHT))
