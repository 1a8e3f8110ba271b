import unittest
from concurrent.futures import ThreadPoolExecutor

from app.main.model.kl import KLPoly
from app.main.service.cartan_service import get_cartan
from app.main.service.coxeter_service import CoxeterSystem, ambient_system
from app.main.service.hecke_oracle_service import kl_polynomials
from app.main.service.integral_service import compute_integral_system
from app.main.service.kl_service import KLCache
from app.main.test.base import BaseTestCase, CacheDirTestCase
from app.main.util.exceptions import NotComparable


class TestKLPoly(unittest.TestCase):
    def test_trims_trailing_zeros(self):
        self.assertEqual(KLPoly((1, 0, 0)), KLPoly.one())
        self.assertTrue(KLPoly((0,)).is_zero())

    def test_arithmetic(self):
        p = KLPoly((1, 1))
        self.assertEqual(p * p, KLPoly((1, 2, 1)))
        self.assertEqual(p - KLPoly.one(), KLPoly((0, 1)))
        self.assertEqual(p.shift(2), KLPoly((0, 0, 1, 1)))
        self.assertEqual(p.at_one(), 2)
        self.assertEqual(p.degree, 1)


class TestInfiniteDihedral(BaseTestCase):
    def setUp(self):
        super().setUp()
        self.system = ambient_system(self.a1)
        self.cache = KLCache(self.system)

    def test_all_polynomials_are_one(self):
        for w in self.system.ball(5):
            for y in self.system.below(w):
                self.assertEqual(self.cache.kl_polynomial(y, w), KLPoly.one())
                self.assertEqual(self.cache.inverse_kl(y, w), KLPoly.one())

    def test_incomparable_pair_is_zero(self):
        self.assertTrue(self.cache.kl_polynomial(self.system.generator(0), self.system.generator(1)).is_zero())
        with self.assertRaises(NotComparable):
            self.cache.inverse_kl(self.system.generator(0), self.system.generator(1))

    def test_mu_only_for_length_one(self):
        w = self.system.element([0, 1, 0, 1])
        for y in self.system.below(w):
            expected = 1 if w.length - y.length == 1 else 0
            self.assertEqual(self.cache.mu(y, w), expected)

    def test_integral_system_of_singular_weight(self):
        system = CoxeterSystem.from_integral_system(compute_integral_system(self.singular, self.a1))
        cache = KLCache(system)
        w = system.element([0, 1, 0])
        self.assertEqual(cache.kl_polynomial(system.identity(), w), KLPoly.one())


class TestFiniteTypes(unittest.TestCase):
    def test_a3_singular_schubert_variety(self):
        system = ambient_system(get_cartan('A3'))
        cache = KLCache(system)
        w = system.element([1, 0, 2, 1])
        self.assertEqual(cache.kl_polynomial(system.identity(), w), KLPoly((1, 1)))
        self.assertEqual(cache.mu(system.identity(), w), 0)
        self.assertEqual(cache.kl_polynomial(system.generator(1), w), KLPoly((1, 1)))

    def test_longest_element_of_a2(self):
        system = ambient_system(get_cartan('A2'))
        cache = KLCache(system)
        longest = system.element([0, 1, 0])
        for y in system.ball(3):
            self.assertEqual(cache.kl_polynomial(y, longest), KLPoly.one())

    def test_matches_hecke_algebra(self):
        system = ambient_system(get_cartan('A3'))
        cache = KLCache(system)
        for (y, w), expected in kl_polynomials(system, 4).items():
            self.assertEqual(cache.kl_polynomial(y, w), expected, f"P({y}, {w})")

    def test_inversion_identity(self):
        system = ambient_system(get_cartan('A3'))
        cache = KLCache(system)
        ball = system.ball(4)
        for z in ball:
            for x in system.below(z):
                total = KLPoly.zero()
                for y in system.below(z):
                    if not system.bruhat_leq(x, y):
                        continue
                    term = cache.inverse_kl(x, y) * cache.kl_polynomial(y, z)
                    total = total + (term if (y.length - x.length) % 2 == 0 else -term)
                self.assertEqual(total, KLPoly.one() if x == z else KLPoly.zero())

    def test_table(self):
        system = ambient_system(get_cartan('A2'))
        entries = KLCache(system).table(system.ball(1))
        self.assertEqual(len(entries), 5)
        self.assertTrue(all(entry.polynomial == '1' for entry in entries))


class TestSharedCache(CacheDirTestCase):
    def setUp(self):
        super().setUp()
        self.system = ambient_system(get_cartan('A3'))
        self.ball = self.system.ball(6)
        self.pairs = [(y, w) for w in self.ball for y in self.ball if self.system.bruhat_leq(y, w)]

    def _sweep(self, cache, offset):
        rotated = self.pairs[offset:] + self.pairs[:offset]
        return {(y.word, w.word): (cache.kl_polynomial(y, w), cache.inverse_kl(y, w)) for y, w in rotated}

    def test_threads_agree_with_sequential(self):
        reference = KLCache(self.system)
        expected = self._sweep(reference, 0)
        shared = KLCache(self.system, self.cache_dir)
        step = len(self.pairs) // 8
        with ThreadPoolExecutor(max_workers=8) as pool:
            results = list(pool.map(lambda k: self._sweep(shared, k * step), range(8)))
        for result in results:
            self.assertEqual(result, expected)
        self.assertEqual(len(shared), len(reference))
        self.assertEqual(shared.flush(), len(shared))
        self.assertEqual(len(KLCache(self.system, self.cache_dir)), len(shared))


if __name__ == '__main__':
    unittest.main()
