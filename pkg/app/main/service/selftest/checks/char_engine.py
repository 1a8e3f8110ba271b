from typing import Any, Dict

from app.main.model.selftest import CheckKind
from app.main.model.weight import Weight
from app.main.service.cartan_service import get_cartan
from app.main.service.character_service import irreducible_character, verma_character, weyl_kac_character
from app.main.service.selftest.base.check import InvariantCheck
from app.main.service.selftest.base.registry import CheckRegistry
from app.main.service.selftest.utils.ParameterValidator import ParameterValidator
from app.main.service.selftest.utils.ResultBuilder import CaseCounter


@CheckRegistry.register(CheckKind.CHAR_ENGINE)
class CharacterEngineCheck(InvariantCheck):
    """Weyl-Kac agreement for integrable weights, Verma agreement for antidominant ones"""

    def validate_parameters(self, parameters: Dict[str, Any]) -> Dict[str, Any]:
        return ParameterValidator.validate_base_parameters(parameters, self.settings)

    def execute(self, parameters: Dict[str, Any]) -> Dict[str, Any]:
        params = self.validate_parameters(parameters)
        depth = params['depth']
        cartan = get_cartan('A1~')
        counter = CaseCounter()
        for pairings in ((0, 0), (1, 0), (0, 2)):
            weight = Weight.from_values(pairings, 0)
            character, _ = irreducible_character(weight, depth, cartan, self.cache_dir)
            counter.expect(character == weyl_kac_character(weight, depth, cartan),
                           f"{weight.format()}: differs from the Weyl-Kac character")
        weight = Weight.from_values((-2, -2), 0)
        character, _ = irreducible_character(weight, depth, cartan, self.cache_dir)
        counter.expect(character == verma_character(weight, depth, cartan), "-2 rho: L(-2 rho) != M(-2 rho)")
        return counter.result({"depth": depth})
