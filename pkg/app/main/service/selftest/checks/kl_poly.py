from typing import Any, Dict

from app.main.model.kl import KLPoly
from app.main.model.selftest import CheckKind
from app.main.service.cartan_service import get_cartan
from app.main.service.coxeter_service import ambient_system
from app.main.service.hecke_oracle_service import kl_polynomials
from app.main.service.kl_service import get_kl_cache
from app.main.service.selftest.base.check import InvariantCheck
from app.main.service.selftest.base.registry import CheckRegistry
from app.main.service.selftest.utils.ParameterValidator import ParameterValidator
from app.main.service.selftest.utils.ResultBuilder import CaseCounter


@CheckRegistry.register(CheckKind.KL_POLY)
class KLPolynomialCheck(InvariantCheck):
    """The recursion against the Hecke-algebra oracle, and the P/Q inversion identity"""

    def validate_parameters(self, parameters: Dict[str, Any]) -> Dict[str, Any]:
        params = ParameterValidator.validate_base_parameters(parameters, self.settings)
        params['types'] = [t for t in params['types'] if t in ('A1~', 'A2', 'B2', 'G2')] or ['A1~']
        return params

    def execute(self, parameters: Dict[str, Any]) -> Dict[str, Any]:
        params = self.validate_parameters(parameters)
        counter = CaseCounter()
        for name in params['types']:
            system = ambient_system(get_cartan(name))
            cache = get_kl_cache(system, self.cache_dir)
            oracle = kl_polynomials(system, params['max_length'])
            for (y, w), expected in oracle.items():
                counter.expect(cache.kl_polynomial(y, w) == expected, f"{name}: P_{{{y},{w}}} differs")
            ball = system.ball(params['max_length'])
            for z in ball:
                for x in system.below(z):
                    total = KLPoly.zero()
                    for y in system.below(z):
                        if system.bruhat_leq(x, y):
                            term = cache.inverse_kl(x, y) * cache.kl_polynomial(y, z)
                            total = total + (term if (y.length - x.length) % 2 == 0 else -term)
                    expected = KLPoly.one() if x == z else KLPoly.zero()
                    counter.expect(total == expected, f"{name}: inversion fails at ({x}, {z})")
            cache.flush()
        return counter.result({"types": params['types']})
