import shutil
import tempfile
import unittest

from app.main.model.weight import Weight
from app.main.service.cartan_service import get_cartan


def weight(*pairings, d=0) -> Weight:
    return Weight.from_values(pairings, d)


class BaseTestCase(unittest.TestCase):
    """Cartan data for A1~, A2~ and A2 plus the A1~ weights used across the suite"""

    def setUp(self):
        self.a1 = get_cartan('A1~')
        self.a2_affine = get_cartan('A2~')
        self.a2 = get_cartan('A2')
        # -2 rho: regular, antidominant
        self.minus_two_rho = weight(-2, -2)
        # s_0 o (-2 rho) = -2 rho + alpha_0
        self.s0_minus_two_rho = weight(0, -4, d=1)
        # lambda + rho = (0, 1/2): Delta_0 = {+-alpha_0}
        self.singular = Weight.parse('h0=-1,h1=-1/2', 2)
        # lambda + rho = (1, 1/2): regular partner of the singular weight
        self.regular = Weight.parse('h0=0,h1=-1/2', 2)
        self.critical = weight(-1, -1)
        # Delta(lambda) is empty
        self.generic = Weight.parse('h0=0+1*t,h1=-1+1*t', 2)
        self.irrational = Weight.parse('h0=0,h1=1/2+1*t', 2)


class CacheDirTestCase(BaseTestCase):
    def setUp(self):
        super().setUp()
        self.cache_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.cache_dir, ignore_errors=True)
