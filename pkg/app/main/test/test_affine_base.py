import json
import os
import tempfile
import unittest
from unittest import mock

from app.main.model.cartan import Root, RootKind
from app.main.model.scalar import Scalar
from app.main.model.weight import Weight
from app.main.service import cartan_service
from app.main.service.cartan_service import get_cartan
from app.main.service.character_service import kostant_table
from app.main.service.root_service import (
    classify_root, level, pairing, positive_real_roots, positive_roots_with_multiplicity, reflect, rho,
    root_weight, shifted_action, weight_difference,
)
from app.main.test.base import BaseTestCase, weight
from app.main.util.exceptions import ImaginaryCoroot, UnknownCartanType


class TestCartanTable(BaseTestCase):
    def test_a1_affine(self):
        self.assertEqual(self.a1.cartan_matrix, ((2, -2), (-2, 2)))
        self.assertEqual(self.a1.delta_coeffs, (1, 1))
        self.assertEqual(self.a1.c_coeffs, (1, 1))
        self.assertEqual(self.a1.imaginary_mult, 1)

    def test_a2_affine(self):
        self.assertEqual(self.a2_affine.rank, 3)
        self.assertEqual(self.a2_affine.delta_coeffs, (1, 1, 1))
        self.assertEqual(self.a2_affine.imaginary_mult, 2)

    def test_delta_is_null(self):
        for name in ('A1~', 'A3~', 'D4~'):
            cartan = get_cartan(name)
            for i in range(cartan.rank):
                self.assertEqual(cartan.root_product(cartan.delta, cartan.simple_root(i)), 0, msg=name)

    def test_finite_type(self):
        self.assertFalse(self.a2.affine)
        self.assertIsNone(self.a2.delta)
        self.assertIsNone(level(self.a2, rho(self.a2)))

    def test_unknown_types(self):
        for name in ('X3', 'A0', 'B2~', 'E5~'):
            with self.assertRaises(UnknownCartanType, msg=name):
                get_cartan(name)

    def test_override_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'cartan.json')
            with open(path, 'w') as f:
                json.dump({"types": {"Z1~": {"cartan_matrix": [[2, -2], [-2, 2]], "affine": True}}}, f)
            with mock.patch.object(cartan_service.Config, 'CARTAN_FILE', path):
                cartan = get_cartan('Z1~')
        self.assertEqual(cartan.delta_coeffs, (1, 1))


class TestRootArithmetic(BaseTestCase):
    def test_rho(self):
        for cartan in (self.a1, self.a2_affine, self.a2):
            for i in range(cartan.rank):
                self.assertEqual(pairing(cartan, cartan.simple_root(i), rho(cartan)), 1)
        self.assertEqual(level(self.a1, rho(self.a1)), 2)

    def test_root_weight(self):
        alpha0 = root_weight(self.a1, self.a1.simple_root(0))
        self.assertEqual(alpha0, weight(2, -2, d=1))

    def test_imaginary_root(self):
        self.assertEqual(classify_root(self.a1, self.a1.delta), RootKind.IMAGINARY)
        with self.assertRaises(ImaginaryCoroot):
            pairing(self.a1, self.a1.delta, rho(self.a1))

    def test_reflection_is_involution(self):
        sample = Weight.parse('h0=1/3,h1=-2+1*t,d=5', 2)
        for i in range(2):
            alpha = self.a1.simple_root(i)
            self.assertEqual(reflect(self.a1, alpha, reflect(self.a1, alpha, sample)), sample)

    def test_shifted_action(self):
        alpha0 = self.a1.simple_root(0)
        self.assertEqual(shifted_action(self.a1, [alpha0], self.minus_two_rho), self.s0_minus_two_rho)
        # s_0 s_1 o 0 = -(3 alpha_0 + alpha_1)
        alpha1 = self.a1.simple_root(1)
        image = shifted_action(self.a1, [alpha0, alpha1], Weight.zero(2))
        self.assertEqual(weight_difference(self.a1, Weight.zero(2), image), Root((3, 1)))

    def test_weight_difference(self):
        self.assertEqual(weight_difference(self.a1, self.s0_minus_two_rho, self.minus_two_rho), Root((1, 0)))
        self.assertIsNone(weight_difference(self.a1, self.singular, self.regular.scaled(Scalar.of(2))))


class TestRootEnumeration(BaseTestCase):
    def test_positive_real_roots(self):
        roots = positive_real_roots(self.a1, 3)
        self.assertEqual([r.coords for r in roots], [(0, 1), (1, 0), (1, 2), (2, 1)])

    def test_multiplicities(self):
        roots = positive_roots_with_multiplicity(self.a1, 2)
        self.assertEqual([(r.coords, m) for r, m in roots], [((0, 1), 1), ((1, 0), 1), ((1, 1), 1)])
        affine = positive_roots_with_multiplicity(self.a2_affine, 3)
        self.assertIn(((1, 1, 1), 2), [(r.coords, m) for r, m in affine])

    def test_kostant_partitions(self):
        table = dict(kostant_table(self.a1, 2))
        self.assertEqual(table[(0, 0)], 1)
        self.assertEqual(table[(1, 0)], 1)
        self.assertEqual(table[(2, 0)], 1)
        # {delta} and {alpha_0, alpha_1}
        self.assertEqual(table[(1, 1)], 2)

    def test_kostant_finite(self):
        table = dict(kostant_table(self.a2, 3))
        self.assertEqual(table[(1, 1)], 2)
        self.assertEqual(table[(2, 1)], 2)


if __name__ == '__main__':
    unittest.main()
