import unittest

from app.main.model.oracle import CENTRAL, LoopGenerator, LoopKind
from app.main.service.character_service import irreducible_character
from app.main.service.shapovalov_service import (
    bracket, determinant, gram_matrix, irreducible_dim, matrix_rank, oracle_report, pbw_monomials,
)
from app.main.test.base import BaseTestCase, weight
from app.main.util.exceptions import DepthExceeded, UnsupportedType


class TestLoopGenerators(unittest.TestCase):
    def test_simple_generators(self):
        # f_1 = f, f_0 = e t^-1
        self.assertEqual(LoopGenerator(LoopKind.F, 0).xi, (0, 1))
        self.assertEqual(LoopGenerator(LoopKind.E, -1).xi, (1, 0))
        self.assertEqual(LoopGenerator(LoopKind.H, -1).xi, (1, 1))
        self.assertTrue(LoopGenerator(LoopKind.E, 0).is_positive())
        self.assertFalse(LoopGenerator(LoopKind.H, 0).is_negative())

    def test_omega_is_an_involution(self):
        for g in (LoopGenerator(LoopKind.E, -2), LoopGenerator(LoopKind.F, 1), LoopGenerator(LoopKind.H, -1)):
            self.assertEqual(g.omega().omega(), g)
        self.assertEqual(LoopGenerator(LoopKind.E, -1).omega(), LoopGenerator(LoopKind.F, 1))

    def test_central_term(self):
        result = bracket(LoopGenerator(LoopKind.E, 1), LoopGenerator(LoopKind.F, -1))
        self.assertEqual(set(result), {LoopGenerator(LoopKind.H, 0), CENTRAL})
        self.assertEqual(bracket(CENTRAL, LoopGenerator(LoopKind.E, 0)), {})


class TestGramMatrix(BaseTestCase):
    def test_simple_root_spaces(self):
        for lam in (self.minus_two_rho, self.singular, self.irrational):
            _, matrix = gram_matrix(lam, (0, 1), self.a1)
            self.assertEqual(matrix, [[lam.pairings[1]]])
            _, matrix = gram_matrix(lam, (1, 0), self.a1)
            self.assertEqual(matrix, [[lam.pairings[0]]])

    def test_vanishing_pairing(self):
        self.assertEqual(irreducible_dim(weight(0, 0), (0, 1), self.a1), 0)
        self.assertEqual(irreducible_dim(weight(0, 0), (0, 0), self.a1), 1)

    def test_monomial_counts(self):
        self.assertEqual(len(pbw_monomials((1, 1))), 2)
        self.assertEqual(len(pbw_monomials((1, 2))), 3)
        self.assertEqual(pbw_monomials((0, 0)), [()])

    def test_antidominant_form_is_nondegenerate(self):
        for xi in ((1, 1), (2, 1), (1, 2), (2, 2)):
            monomials, matrix = gram_matrix(self.minus_two_rho, xi, self.a1)
            self.assertEqual(matrix_rank(matrix), len(monomials), xi)
            self.assertTrue(determinant(matrix))

    def test_singular_vector_of_singular_weight(self):
        monomials, matrix = gram_matrix(self.singular, (1, 2), self.a1)
        self.assertEqual(len(monomials), 3)
        self.assertEqual(matrix_rank(matrix), 2)
        self.assertFalse(determinant(matrix))

    def test_agrees_with_character_engine(self):
        character, _ = irreducible_character(self.s0_minus_two_rho, 2, self.a1)
        for xi in ((0, 0), (1, 0), (0, 1), (1, 1), (2, 0), (0, 2)):
            self.assertEqual(irreducible_dim(self.s0_minus_two_rho, xi, self.a1), character.coefficient(xi), xi)

    def test_report(self):
        report = oracle_report(self.minus_two_rho, (0, 0), self.a1)
        self.assertEqual(report.size, 1)
        self.assertEqual(report.rank, 1)
        self.assertEqual(report.monomials, ['1'])
        self.assertEqual(report.cartan_type, 'A1~')


class TestOracleLimits(BaseTestCase):
    def test_height_limit(self):
        with self.assertRaises(DepthExceeded):
            gram_matrix(self.minus_two_rho, (3, 2), self.a1)

    def test_malformed_xi(self):
        with self.assertRaises(ValueError):
            gram_matrix(self.minus_two_rho, (-1, 0), self.a1)

    def test_unsupported_type(self):
        with self.assertRaises(UnsupportedType):
            gram_matrix(weight(0, 0, 0), (0, 1), self.a2_affine)


if __name__ == '__main__':
    unittest.main()
