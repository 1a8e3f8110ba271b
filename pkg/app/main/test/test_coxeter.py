import unittest

from app.main.model.cartan import Root
from app.main.service.cartan_service import get_cartan
from app.main.service.coxeter_service import CoxeterSystem, ambient_system, word_string
from app.main.service.integral_service import compute_integral_system
from app.main.service.root_service import positive_real_roots
from app.main.test.base import BaseTestCase, weight
from app.main.util.exceptions import MixedSystems, NotComparable, NotDominant


class TestAmbientGroup(BaseTestCase):
    def setUp(self):
        super().setUp()
        self.system = ambient_system(self.a1)

    def test_ball_of_infinite_dihedral(self):
        ball = self.system.ball(2)
        self.assertEqual([u.word for u in ball], [(), (0,), (1,), (0, 1), (1, 0)])
        self.assertEqual(len(self.system.ball(5)), 11)

    def test_finite_group_ball_stops(self):
        system = ambient_system(self.a2)
        ball = system.ball(10)
        self.assertEqual(len(ball), 6)
        self.assertEqual(max(u.length for u in ball), 3)

    def test_words_are_normalized(self):
        self.assertEqual(self.system.element([0, 0]), self.system.identity())
        self.assertEqual(self.system.element([0, 1, 1, 0, 1]).word, (1,))
        self.assertEqual(self.system.element([1, 0, 1]).length, 3)

    def test_inverse(self):
        w = self.system.element([0, 1])
        self.assertEqual(self.system.inverse(w).word, (1, 0))
        self.assertEqual(self.system.multiply(w, self.system.inverse(w)), self.system.identity())

    def test_reflection_in_real_root(self):
        # s_1 alpha_0 = alpha_0 + 2 alpha_1
        reflection = self.system.reflection(Root((1, 2)))
        self.assertEqual(reflection.word, (1, 0, 1))
        self.assertEqual(reflection.act(Root((1, 2))), Root((-1, -2)))

    def test_descents(self):
        w = self.system.element([1, 0])
        self.assertEqual(self.system.descents_left(w), frozenset({1}))
        self.assertEqual(self.system.descents_right(w), frozenset({0}))

    def test_bruhat_order_is_by_length(self):
        s0 = self.system.generator(0)
        s1 = self.system.generator(1)
        w = self.system.element([0, 1, 0])
        self.assertTrue(self.system.bruhat_leq(s1, w))
        self.assertTrue(self.system.bruhat_leq(self.system.element([1, 0]), w))
        self.assertFalse(self.system.bruhat_leq(s0, s1))
        self.assertFalse(self.system.bruhat_leq(w, s0))

    def test_below_has_two_per_length(self):
        for length in range(1, 6):
            w = self.system.element([i % 2 for i in range(length)])
            self.assertEqual(len(self.system.below(w)), 2 * length)

    def test_interval(self):
        w = self.system.element([0, 1, 0])
        interval = self.system.interval(self.system.generator(0), w)
        self.assertEqual(sorted(len(v) for v in interval.by_length().values()), [1, 1, 2])
        self.assertIn(w, interval)
        with self.assertRaises(NotComparable):
            self.system.interval(self.system.generator(0), self.system.generator(1))

    def test_dot_action(self):
        image, offset = self.system.dot_action(self.system.generator(0), self.minus_two_rho)
        self.assertEqual(image, self.s0_minus_two_rho)
        self.assertEqual(offset, Root((-1, 0)))

    def test_orbit_points_upward(self):
        points = self.system.orbit_points(self.minus_two_rho, 1, downward=False)
        self.assertEqual([p.offset.coords for p in points], [(0, 0), (-1, 0), (0, -1)])
        self.assertEqual([p.element.word for p in points], [(), (0,), (1,)])

    def test_length_counts_inversions(self):
        cases = [(self.a1, 5, 12), (self.a2_affine, 4, 30), (get_cartan('A3'), 6, 10)]
        for cartan, max_length, max_height in cases:
            system = ambient_system(cartan)
            positives = positive_real_roots(cartan, max_height)
            for u in system.ball(max_length):
                self.assertEqual(system.inversion_count(u, positives), u.length, (cartan.name, u.word))

    def test_matrices_are_faithful(self):
        for cartan, size in ((self.a1, 13), (self.a2_affine, 64)):
            system = ambient_system(cartan)
            ball = system.ball(6)
            self.assertEqual(len(ball), size)
            self.assertEqual(len({u.key for u in ball}), size)
            simples = [cartan.simple_root(i) for i in range(cartan.rank)]
            for u in ball:
                for beta in simples:
                    image = beta
                    for i in reversed(u.word):
                        image = system.generator(i).act(image)
                    self.assertEqual(u.act(beta), image, u.word)

    def test_exchange_property(self):
        for cartan in (self.a1, self.a2_affine):
            system = ambient_system(cartan)
            for w in system.ball(6):
                descents = system.descents_right(w)
                for i in range(system.rank):
                    ws = system.right_multiply(w, i)
                    if i not in descents:
                        self.assertEqual(ws.length, w.length + 1)
                        continue
                    self.assertEqual(ws.length, w.length - 1)
                    deletions = [system.element(w.word[:k] + w.word[k + 1:]) for k in range(w.length)]
                    self.assertIn(ws, deletions, (w.word, i))

    def test_word_string(self):
        self.assertEqual(word_string(()), 'e')
        self.assertEqual(word_string((1, 0), ['a', 'b']), 'ba')


class TestIntegralGroup(BaseTestCase):
    def setUp(self):
        super().setUp()
        self.integral = compute_integral_system(self.singular, self.a1)
        self.system = CoxeterSystem.from_integral_system(self.integral)

    def test_generators_follow_simple_roots(self):
        self.assertEqual(self.system.rank, 2)
        self.assertEqual(self.system.simples, self.integral.simples)

    def test_same_system_is_shared(self):
        regular = compute_integral_system(self.regular, self.a1)
        self.assertIs(CoxeterSystem.from_integral_system(regular), self.system)

    def test_stabilizer(self):
        stabilizer = self.system.subgroup(self.integral.simples0)
        self.assertEqual(len(stabilizer), 2)
        self.assertEqual(stabilizer[0], self.system.identity())

    def test_coset_extremes(self):
        stabilizer = self.system.subgroup(self.integral.simples0)
        w = self.system.generator(1)
        self.assertEqual(self.system.coset_extreme(w, stabilizer, longest=True).word, (1, 0))
        self.assertEqual(self.system.coset_extreme(w, stabilizer, longest=False).word, (1,))

    def test_mixed_systems(self):
        outside = ambient_system(self.a1).generator(0)
        with self.assertRaises(MixedSystems):
            self.system.multiply(self.system.generator(0), outside)

    def test_enumerate_above_requires_dominant(self):
        stabilizer = self.system.subgroup(self.integral.simples0)
        self.assertTrue(self.system.is_dominant(self.singular))
        # lambda + rho = (1, -3): (alpha_0 + 2 alpha_1)^v pairs to -5
        self.assertFalse(self.system.is_dominant(self.s0_minus_two_rho))
        with self.assertRaises(NotDominant):
            self.system.enumerate_above_within(self.system.identity(), 2, self.s0_minus_two_rho, stabilizer)
        with self.assertRaises(NotDominant):
            self.system.enumerate_above_within(self.system.identity(), 2, self.s0_minus_two_rho,
                                               [self.system.identity()])

    def brute_force_above(self, w, budget, stabilizer):
        _, top = self.system.dot_action(w, self.singular)
        found = set()
        for y in self.system.ball(8):
            if self.system.coset_extreme(y, stabilizer) != y or not self.system.bruhat_leq(w, y):
                continue
            _, offset = self.system.dot_action(y, self.singular)
            drop = offset - top
            if drop.height <= budget and all(n >= 0 for n in drop.coords):
                found.add(y)
        return found

    def test_enumerate_above_within(self):
        stabilizer = self.system.subgroup(self.integral.simples0)
        for start in ([], [1], [1, 0, 1]):
            w = self.system.coset_extreme(self.system.element(start), stabilizer)
            for budget in range(5):
                above = self.system.enumerate_above_within(w, budget, self.singular, stabilizer)
                self.assertEqual(set(above), self.brute_force_above(w, budget, stabilizer), (start, budget))
                self.assertEqual(len(set(above)), len(above))

    def test_enumerate_above_within_edges(self):
        stabilizer = self.system.subgroup(self.integral.simples0)
        w = self.system.coset_extreme(self.system.identity(), stabilizer)
        self.assertEqual(self.system.enumerate_above_within(w, 0, self.singular, stabilizer), [w])
        self.assertEqual(self.system.enumerate_above_within(w, -1, self.singular, stabilizer), [])

    def test_stabilizer_fixes_exactly_the_weight(self):
        stabilizer = set(self.system.subgroup(self.integral.simples0))
        for u in self.system.ball(6):
            image, _ = self.system.dot_action(u, self.singular)
            self.assertEqual(image == self.singular, u in stabilizer, u)


class TestEnumerationAboveZero(BaseTestCase):
    def test_regular_weight_in_affine_a1(self):
        system = ambient_system(self.a1)
        above = system.enumerate_above_within(system.identity(), 2, weight(0, 0), [system.identity()])
        self.assertEqual([y.word for y in above], [(), (0,), (1,)])


class TestFiniteGroup(unittest.TestCase):
    def test_a3_order(self):
        system = ambient_system(get_cartan('A3'))
        self.assertEqual(len(system.ball(6)), 24)


if __name__ == '__main__':
    unittest.main()
