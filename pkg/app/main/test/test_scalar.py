import unittest
from fractions import Fraction

from app.main.model.scalar import SQRT2, Scalar
from app.main.model.weight import Weight
from app.main.util.exceptions import WeightSyntaxError


class TestScalar(unittest.TestCase):
    def test_arithmetic(self):
        x = Scalar(1, 1)
        self.assertEqual(x * Scalar(1, -1), Scalar.of(-1))
        self.assertEqual(SQRT2 * SQRT2, Scalar.of(2))
        self.assertEqual(x / x, Scalar.of(1))
        self.assertEqual(x - 1, SQRT2)

    def test_order(self):
        self.assertGreater(Scalar(3, -2), 0)
        self.assertLess(Scalar(-3, 2), 0)
        self.assertLess(Scalar(1, -1), 0)
        self.assertEqual(Scalar.of(0).sign(), 0)

    def test_parse_and_format(self):
        value = Scalar.parse('1/2+3*t')
        self.assertEqual(value.a, Fraction(1, 2))
        self.assertEqual(value.b, 3)
        self.assertEqual(str(value), '1/2+3*t')
        self.assertEqual(str(Scalar.parse('-4')), '-4')
        with self.assertRaises(WeightSyntaxError):
            Scalar.parse('1/0')
        with self.assertRaises(WeightSyntaxError):
            Scalar.parse('abc')

    def test_integrality(self):
        self.assertTrue(Scalar.of(3).is_integer())
        self.assertFalse(Scalar(Fraction(1, 2)).is_integer())
        self.assertFalse(SQRT2.is_rational())
        with self.assertRaises(ValueError):
            SQRT2.to_int()

    def test_to_sympy_round_trip(self):
        value = Scalar(Fraction(-2, 3), Fraction(5, 7))
        self.assertEqual(Scalar.from_sympy(value.to_sympy()), value)


class TestWeightGrammar(unittest.TestCase):
    def test_parse(self):
        weight = Weight.parse('h0=-2,h1=-2,d=0', 2)
        self.assertEqual(weight.pairings, (Scalar.of(-2), Scalar.of(-2)))
        self.assertEqual(weight.format(), 'h0=-2,h1=-2,d=0')
        self.assertEqual(Weight.parse(weight.format(), 2), weight)

    def test_d_is_optional(self):
        self.assertEqual(Weight.parse('h1=1,h0=0', 2), Weight.from_values([0, 1], 0))

    def test_irrational_entries(self):
        weight = Weight.parse('h0=0,h1=1/2+1*t', 2)
        self.assertFalse(weight.is_rational())
        self.assertEqual(Weight.parse(weight.format(), 2), weight)

    def test_errors(self):
        for text in ('h0=1', 'h0=1,h0=2,h1=0', 'h0=1,h5=0', 'h0=1,,h1=2', 'x=1,h0=0,h1=0'):
            with self.assertRaises(WeightSyntaxError, msg=text):
                Weight.parse(text, 2)


if __name__ == '__main__':
    unittest.main()
