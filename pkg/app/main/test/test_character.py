import unittest

from app.main.model.weight import Weight
from app.main.service.character_service import (
    character_schema, decomposition_multiplicities, invert_unitriangular, irreducible_character, kostant_table,
    linkage_context, merge_terms, orbit_representatives, transport_coefficients, translated_character,
    translation_survives, verma_character, weyl_kac_character,
)
from app.main.test.base import BaseTestCase, weight
from app.main.util.exceptions import (
    BudgetExceeded, ChambersDiffer, IntegralityMismatch, NotDominantIntegral, PreconditionViolated,
)


class TestVermaCharacter(BaseTestCase):
    def test_matches_kostant_table(self):
        character = verma_character(self.minus_two_rho, 3, self.a1)
        self.assertEqual(dict(kostant_table(self.a1, 3)), character.coeffs)
        self.assertEqual(character.coefficient((1, 1)), 2)
        self.assertEqual(character.coefficient((0, 0)), 1)

    def test_antidominant_irreducible_is_verma(self):
        character, terms = irreducible_character(self.minus_two_rho, 4, self.a1)
        self.assertEqual(character, verma_character(self.minus_two_rho, 4, self.a1))
        self.assertEqual([t.y.word for t in terms], [()])

    def test_empty_integral_system(self):
        character, terms = irreducible_character(self.generic, 3, self.a1)
        self.assertEqual(character, verma_character(self.generic, 3, self.a1))
        self.assertEqual(terms, [])


class TestIrreducibleCharacter(BaseTestCase):
    def test_one_step_above_antidominant(self):
        character, terms = irreducible_character(self.s0_minus_two_rho, 4, self.a1)
        expected = verma_character(self.s0_minus_two_rho, 4, self.a1)
        for xi, count in kostant_table(self.a1, 3):
            expected.add_term((xi[0] + 1, xi[1]), -count)
        self.assertEqual(character, expected)
        self.assertEqual(character.coefficient((1, 0)), 0)
        self.assertEqual(character.coefficient((0, 1)), 1)
        self.assertEqual(character.coefficient((1, 1)), 1)
        self.assertEqual(character.coefficient((2, 0)), 0)
        self.assertEqual(sorted(t.value for t in terms), [-1, 1])

    def test_trivial_module(self):
        character, _ = irreducible_character(weight(0, 0), 5, self.a1)
        self.assertEqual(character.support(), [((0, 0), 1)])

    def test_agrees_with_weyl_kac(self):
        for highest in (weight(0, 0), weight(1, 0), weight(0, 2), weight(1, 1), weight(2, 0)):
            character, _ = irreducible_character(highest, 6, self.a1)
            self.assertEqual(character, weyl_kac_character(highest, 6, self.a1), highest.format())

    def test_finite_type(self):
        character, _ = irreducible_character(weight(1, 0), 6, self.a2)
        self.assertEqual(character.support(), [((0, 0), 1), ((1, 0), 1), ((1, 1), 1)])

    def test_singular_weight(self):
        character, terms = irreducible_character(self.singular, 3, self.a1)
        expected = verma_character(self.singular, 3, self.a1)
        expected.add_term((1, 2), -1)
        self.assertEqual(character, expected)
        self.assertEqual(merge_terms(terms), {(0, 0): 1, (1, 2): -1})

    def test_singular_context(self):
        context = linkage_context(self.singular, self.a1)
        self.assertTrue(context.plus)
        self.assertEqual(len(context.stabilizer), 2)
        self.assertEqual(context.w.length, 1)

    def test_coefficients_are_dimensions(self):
        suite = (self.minus_two_rho, self.s0_minus_two_rho, self.singular, self.regular, self.generic,
                 self.irrational, weight(0, 0), weight(1, 0), weight(3, -4), weight(-4, 1))
        for lam in suite:
            character, _ = irreducible_character(lam, 3, self.a1)
            self.assertTrue(all(c > 0 for c in character.coeffs.values()), lam.format())
            self.assertEqual(character.coefficient((0, 0)), 1)

    def test_truncation_is_coherent(self):
        deep, _ = irreducible_character(self.singular, 5, self.a1)
        shallow, _ = irreducible_character(self.singular, 3, self.a1)
        self.assertEqual(deep.restrict(3), shallow)

    def test_schema(self):
        character, terms = irreducible_character(self.s0_minus_two_rho, 2, self.a1)
        schema = character_schema(character, terms)
        self.assertEqual(schema.depth, 2)
        self.assertEqual(schema.terms[0].xi, [0, 0])
        self.assertEqual(sorted(f.sign for f in schema.formula), [-1, 1])


class TestDecomposition(BaseTestCase):
    def test_invert_unitriangular(self):
        self.assertEqual(invert_unitriangular([[1, 2], [0, 1]]), [[1, -2], [0, 1]])
        self.assertEqual(invert_unitriangular([[1, -1], [0, 1]]), [[1, 1], [0, 1]])
        self.assertEqual(invert_unitriangular([]), [])
        for matrix in ([[2, 0], [0, 1]], [[1, 1], [1, 1]]):
            with self.assertRaises(PreconditionViolated):
                invert_unitriangular(matrix)

    def test_two_point_class(self):
        data = decomposition_multiplicities(self.s0_minus_two_rho, 1, self.a1)
        self.assertFalse(data.plus)
        # simple roots sort by (height, coords): s_{alpha_0} is generator 1
        self.assertEqual([x.word for x in data.rows], [(1,), ()])
        self.assertEqual(data.row_offsets, [(-1, 0), (0, 0)])
        self.assertEqual(data.coefficients, [[1, -1], [0, 1]])
        self.assertEqual(data.multiplicities, [[1, 1], [0, 1]])
        self.assertEqual(data.to_dict()['chamber'], 'CMinus')

    def test_orbit_representatives(self):
        reps = orbit_representatives(self.s0_minus_two_rho, 1, self.a1)
        self.assertEqual([(x.word, offset.coords) for x, offset in reps], [((1,), (-1, 0)), ((), (0, 0))])
        self.assertEqual(len(orbit_representatives(self.s0_minus_two_rho, 0, self.a1)), 1)

    def test_same_integrality_gives_same_matrix(self):
        for first, second in ((self.minus_two_rho, weight(-2, -2, d=-1)),
                              (self.s0_minus_two_rho, weight(0, -4, d=3)),
                              (self.regular, Weight.parse('h0=0,h1=-1/2,d=5/2', 2))):
            a = decomposition_multiplicities(first, 3, self.a1)
            b = decomposition_multiplicities(second, 3, self.a1)
            self.assertEqual(a.coefficients, b.coefficients)
            self.assertEqual(a.row_offsets, b.row_offsets)

    def test_transport_along_delta_shift(self):
        data = decomposition_multiplicities(self.s0_minus_two_rho, 3, self.a1)
        transported = transport_coefficients(data, weight(-2, -2, d=-1), self.a1)
        self.assertEqual(len(transported.rows), 2)
        self.assertEqual(transported.coefficients, data.coefficients)
        self.assertEqual(transported.multiplicities, data.multiplicities)


class TestTranslation(BaseTestCase):
    def test_translation_to_singular_wall(self):
        data = decomposition_multiplicities(self.regular, 14, self.a1)
        transported = transport_coefficients(data, self.singular, self.a1)
        row = transported.row_offsets.index((0, 0))
        self.assertEqual(transported.rows[row].word, (0,))
        character = translated_character(transported, row, 3, self.a1)
        expected, _ = irreducible_character(self.singular, 3, self.a1)
        self.assertEqual(character, expected)

    def test_shallow_data_is_incomplete(self):
        data = decomposition_multiplicities(self.regular, 1, self.a1)
        transported = transport_coefficients(data, self.singular, self.a1)
        row = transported.row_offsets.index((0, 0))
        with self.assertRaises(BudgetExceeded):
            translated_character(transported, row, 3, self.a1)

    def test_identity_is_killed(self):
        context = linkage_context(self.regular, self.a1)
        self.assertFalse(translation_survives(context.coxeter.identity(), self.regular, self.singular, self.a1))
        self.assertTrue(translation_survives(context.coxeter.generator(0), self.regular, self.singular, self.a1))

    def test_preconditions(self):
        identity = linkage_context(self.regular, self.a1).coxeter.identity()
        with self.assertRaises(IntegralityMismatch):
            translation_survives(identity, self.regular, self.minus_two_rho, self.a1)
        with self.assertRaises(ChambersDiffer):
            translation_survives(identity, self.minus_two_rho, weight(0, 0), self.a1)
        with self.assertRaises(PreconditionViolated):
            translation_survives(identity, self.singular, self.regular, self.a1)


class TestWeylKac(BaseTestCase):
    def test_requires_dominant_integral(self):
        with self.assertRaises(NotDominantIntegral):
            weyl_kac_character(self.minus_two_rho, 2, self.a1)
        with self.assertRaises(NotDominantIntegral):
            weyl_kac_character(self.singular, 2, self.a1)

    def test_finite_trivial(self):
        self.assertEqual(weyl_kac_character(Weight.zero(2), 4, self.a2).support(), [((0, 0), 1)])


if __name__ == '__main__':
    unittest.main()
