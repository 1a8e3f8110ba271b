from typing import Any, Dict

from app.main.model.selftest import CheckKind
from app.main.model.weight import Weight
from app.main.service.cartan_service import get_cartan
from app.main.service.character_service import irreducible_character, verma_character
from app.main.service.selftest.base.check import InvariantCheck
from app.main.service.selftest.base.registry import CheckRegistry
from app.main.service.selftest.utils.ParameterValidator import ParameterValidator
from app.main.service.selftest.utils.ResultBuilder import CaseCounter
from app.main.service.shapovalov_service import gram_matrix, matrix_rank

ORACLE_SUITE = ["h0=-2,h1=-2", "h0=0,h1=0", "h0=-1,h1=-1/2", "h0=1/3,h1=1/5", "h0=0,h1=1/2+1*t"]


@CheckRegistry.register(CheckKind.SHAPOVALOV_ORACLE)
class ShapovalovOracleCheck(InvariantCheck):
    """Gram ranks of the contravariant form against the character engine"""

    def validate_parameters(self, parameters: Dict[str, Any]) -> Dict[str, Any]:
        params = ParameterValidator.validate_base_parameters(parameters, self.settings)
        params['height'] = ParameterValidator.validate_oracle_height(
            parameters.get('height'), self.settings.oracle_height)
        return params

    def execute(self, parameters: Dict[str, Any]) -> Dict[str, Any]:
        params = self.validate_parameters(parameters)
        height = params['height']
        cartan = get_cartan('A1~')
        counter = CaseCounter()
        for text in ORACLE_SUITE:
            weight = Weight.parse(text, 2)
            character, _ = irreducible_character(weight, height, cartan, self.cache_dir)
            verma = verma_character(weight, height, cartan)
            for n0 in range(height + 1):
                for n1 in range(height + 1 - n0):
                    xi = (n0, n1)
                    monomials, matrix = gram_matrix(weight, xi, cartan)
                    counter.expect(len(monomials) == verma.coefficient(xi),
                                   f"{text}: dim M at {xi} is {len(monomials)}")
                    counter.expect(matrix_rank(matrix) == character.coefficient(xi),
                                   f"{text}: rank at {xi} differs from the character")
        return counter.result({"height": height})
