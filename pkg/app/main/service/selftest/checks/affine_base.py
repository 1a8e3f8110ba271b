from typing import Any, Dict

from app.main.model.cartan import RootKind
from app.main.model.selftest import CheckKind
from app.main.model.weight import Weight
from app.main.service.cartan_service import get_cartan
from app.main.service.root_service import (
    classify_root, pairing, positive_roots_with_multiplicity, reflect, rho, weight_difference,
)
from app.main.service.selftest.base.check import InvariantCheck
from app.main.service.selftest.base.registry import CheckRegistry
from app.main.service.selftest.utils.ParameterValidator import ParameterValidator
from app.main.service.selftest.utils.ResultBuilder import CaseCounter


@CheckRegistry.register(CheckKind.AFFINE_BASE)
class AffineBaseCheck(InvariantCheck):
    """rho, reflections and the form on delta for every requested type"""

    def validate_parameters(self, parameters: Dict[str, Any]) -> Dict[str, Any]:
        params = ParameterValidator.validate_base_parameters(parameters, self.settings)
        params['types'] = params['types'] + [t for t in ('A2~', 'A2') if t not in params['types']]
        return params

    def execute(self, parameters: Dict[str, Any]) -> Dict[str, Any]:
        params = self.validate_parameters(parameters)
        counter = CaseCounter()
        for name in params['types']:
            cartan = get_cartan(name)
            sample = Weight.from_values([k - 1 for k in range(cartan.rank)], 3)
            for i in range(cartan.rank):
                alpha = cartan.simple_root(i)
                counter.expect(pairing(cartan, alpha, rho(cartan)) == 1, f"{name}: (alpha_{i}^v, rho) != 1")
                twice = reflect(cartan, alpha, reflect(cartan, alpha, sample))
                counter.expect(twice == sample, f"{name}: s_{i}^2 is not the identity")
                image = reflect(cartan, alpha, sample)
                counter.expect(weight_difference(cartan, sample, image) is not None,
                               f"{name}: lambda - s_{i} lambda is not in Q")
            if cartan.affine:
                delta = cartan.delta
                counter.expect(classify_root(cartan, delta) == RootKind.IMAGINARY, f"{name}: delta is real")
                for i in range(cartan.rank):
                    counter.expect(cartan.root_product(delta, cartan.simple_root(i)) == 0,
                                   f"{name}: (delta, alpha_{i}) != 0")
            for root, _ in positive_roots_with_multiplicity(cartan, params['depth']):
                counter.expect(root.is_positive(), f"{name}: {root} listed as positive")
        return counter.result({"types": params['types']})
