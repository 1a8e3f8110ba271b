from typing import Any, Dict, List

from app.main.model.integral import ChamberClass
from app.main.model.scalar import Scalar
from app.main.model.selftest import CheckKind
from app.main.model.weight import Weight
from app.main.service.cartan_service import get_cartan
from app.main.service.coxeter_service import CoxeterSystem
from app.main.service.integral_service import (
    classify_chamber, compute_integral_system, dominant_representative, targets_plus,
)
from app.main.service.selftest.base.check import InvariantCheck
from app.main.service.selftest.base.registry import CheckRegistry
from app.main.service.selftest.utils.ParameterValidator import ParameterValidator
from app.main.service.selftest.utils.ResultBuilder import CaseCounter

A1_SUITE = [
    ("-2,-2", "regular C-"),
    ("-1,-1/2", "singular C+"),
    ("0,-1/2", "regular C+"),
    ("0,0", "integrable"),
    ("1/3,1/5", "rational level"),
]


def _a1_weights() -> List[Weight]:
    weights = []
    for text, _ in A1_SUITE:
        h0, h1 = text.split(",")
        weights.append(Weight.parse(f"h0={h0},h1={h1}", 2))
    weights.append(Weight((Scalar.parse("0"), Scalar.parse("1/2+1*t")), Scalar.of(0)))
    return weights


@CheckRegistry.register(CheckKind.INTEGRAL_SYSTEM)
class IntegralSystemCheck(InvariantCheck):
    """Orbit invariance of Delta(lambda) and the chamber of the dominant representative"""

    def validate_parameters(self, parameters: Dict[str, Any]) -> Dict[str, Any]:
        return ParameterValidator.validate_base_parameters(parameters, self.settings)

    def execute(self, parameters: Dict[str, Any]) -> Dict[str, Any]:
        self.validate_parameters(parameters)
        cartan = get_cartan('A1~')
        counter = CaseCounter()
        for weight in _a1_weights():
            system = compute_integral_system(weight, cartan)
            label = weight.format()
            if system.is_empty():
                continue
            representative = dominant_representative(weight, cartan, system)
            mu_system = compute_integral_system(representative.mu, cartan)
            counter.expect(mu_system.root_set_key() == system.root_set_key(),
                           f"{label}: Delta changes along the orbit")
            expected = ChamberClass.CPLUS if targets_plus(system) else ChamberClass.CMINUS
            counter.expect(classify_chamber(mu_system) == expected,
                           f"{label}: representative is not in {expected.value}")
            coxeter = CoxeterSystem.from_integral_system(mu_system)
            w = coxeter.element(reversed(representative.word))
            image, _ = coxeter.dot_action(w, representative.mu)
            counter.expect(image == weight, f"{label}: w o mu does not recover lambda")
            for alpha in system.simples:
                counter.expect(alpha.is_positive(), f"{label}: simple root {alpha} is not positive")
        return counter.result()
