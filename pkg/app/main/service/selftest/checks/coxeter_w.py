from typing import Any, Dict

from app.main.model.selftest import CheckKind
from app.main.service.cartan_service import get_cartan
from app.main.service.coxeter_service import ambient_system
from app.main.service.selftest.base.check import InvariantCheck
from app.main.service.selftest.base.registry import CheckRegistry
from app.main.service.selftest.utils.ParameterValidator import ParameterValidator
from app.main.service.selftest.utils.ResultBuilder import CaseCounter


@CheckRegistry.register(CheckKind.COXETER_W)
class CoxeterCheck(InvariantCheck):
    """Group laws, descents and Bruhat intervals on the infinite dihedral group"""

    def validate_parameters(self, parameters: Dict[str, Any]) -> Dict[str, Any]:
        return ParameterValidator.validate_base_parameters(parameters, self.settings)

    def execute(self, parameters: Dict[str, Any]) -> Dict[str, Any]:
        params = self.validate_parameters(parameters)
        system = ambient_system(get_cartan('A1~'))
        identity = system.identity()
        counter = CaseCounter()
        ball = system.ball(params['max_length'])
        for w in ball:
            inverse = system.inverse(w)
            counter.expect(system.multiply(w, inverse) == identity, f"{w} w^-1 != e")
            counter.expect(inverse.length == w.length, f"l({w}^-1) != l({w})")
            counter.expect(system.bruhat_leq(identity, w), f"e is not below {w}")
            if w.length:
                counter.expect(bool(system.descents_left(w)), f"{w} has no left descent")
                # [e, w] in the infinite dihedral group has 2 l(w) elements
                counter.expect(len(system.below(w)) == 2 * w.length, f"|[e, {w}]| != 2 l(w)")
        return counter.result({"ball_size": len(ball)})
