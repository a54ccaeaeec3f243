import random
import unittest

from Tests.utils.utils import read_test_file
from e2p.core.FormulaTools import FormulaTools
from e2p.core.FriedmanTranslator import FriedmanTranslator
from e2p.core.Models.Formula import Atom, FalseC, And, Or, Imp, All, Ex
from e2p.core.Models.ProofTree import ProofRule
from e2p.core.Parsers.FormulaParser import FormulaParser
from e2p.core.Parsers.ProofParser import ProofParser
from e2p.core.Parsers.TermParser import TermParser
from e2p.core.ProofChecker import ProofChecker, ProofRejected, MINIMAL, INTUITIONISTIC
from e2p.core.ProofSynthesizer import prf_driver


def random_formula(generator, depth, bound=()):
    """
    A random closed formula over False, P/0, Q/1 and R/2
    """
    if depth == 0 or generator.random() < 0.2:
        if generator.random() < 0.25:
            return FalseC()
        name, arity = generator.choice([("P", 0), ("Q", 1), ("R", 2)] if bound else [("P", 0)])
        return Atom(name, tuple(generator.choice(bound) for _ in range(arity)))
    shape = generator.choice([And, Or, Imp, All, Ex])
    if shape in (All, Ex):
        var = "x%d" % len(bound)
        return shape(var, random_formula(generator, depth - 1, bound + (var,)))
    return shape(random_formula(generator, depth - 1, bound), random_formula(generator, depth - 1, bound))


def load_theorem(index):
    goal = FormulaParser.parse(read_test_file("files/friedman/f%02d.fol" % index))
    evidence = TermParser.parse(read_test_file("files/friedman/f%02d.evd" % index))
    return goal, evidence


class TestFriedmanTranslator(unittest.TestCase):
    """
    Class to test the intuitionistic proofs built through the translation
    """

    def setUp(self):
        self.theorems = [load_theorem(index) for index in range(1, 12)]

    def test_theorems_use_false(self):
        self.assertEqual(FormulaParser.parse("False => P"), self.theorems[0][0])
        self.assertEqual(FormulaParser.parse("(False \\/ P) => P"), self.theorems[1][0])
        for goal, _ in self.theorems:
            self.assertFalse(FormulaTools.is_minimal(goal), str(goal))

    def test_placeholder_atom(self):
        self.assertEqual(Atom("bot"), FriedmanTranslator.placeholder_atom(FormulaParser.parse("False => P")))
        self.assertEqual(Atom("bot_1"), FriedmanTranslator.placeholder_atom(FormulaParser.parse("bot => False")))
        self.assertEqual(Atom("zero"), FriedmanTranslator.placeholder_atom(FormulaParser.parse("P"), "zero"))

    def test_translate(self):
        goal = FormulaParser.parse("False => P")
        self.assertEqual(FormulaParser.parse("bot => P \\/ bot"), FriedmanTranslator.translate(goal, Atom("bot")))
        self.assertEqual(Imp(FalseC(), FormulaParser.parse("P \\/ False")),
                         FriedmanTranslator.translate(goal, FalseC()))

    def test_intuitionistic_proofs(self):
        for goal, evidence in self.theorems:
            placeholder = FriedmanTranslator.placeholder_atom(goal)
            translated = FriedmanTranslator.translate(goal, placeholder)

            ml_proof = prf_driver(translated, evidence)
            self.assertTrue(ProofChecker.check_proof(translated, ml_proof, MINIMAL), str(goal))
            self.assertNotIn(ProofRule.FalseElim, ml_proof.rule_counts())

            il_proof = FriedmanTranslator.il_proof_from_translation(goal, ml_proof, placeholder.name)
            self.assertTrue(ProofChecker.check_proof(goal, il_proof, INTUITIONISTIC), str(goal))
            self.assertEqual(ProofRule.Cut, il_proof.rule)
            with self.assertRaises(ProofRejected):
                ProofChecker.check_proof(goal, il_proof, MINIMAL)

    def test_false_instantiation_equivalence(self):
        for goal, _ in self.theorems + [(FormulaParser.parse("all x. ex y. R(x, y) /\\ ~Q(y)"), None)]:
            backward, forward = FriedmanTranslator.false_instantiation_equivalence(goal)
            translated = FriedmanTranslator.translate(goal, FalseC())

            self.assertTrue(ProofChecker.check_proof(Imp(translated, goal), backward, INTUITIONISTIC), str(goal))
            self.assertTrue(ProofChecker.check_proof(Imp(goal, translated), forward, INTUITIONISTIC), str(goal))

    def test_false_instantiation_equivalence_random(self):
        generator = random.Random(0)
        for _ in range(200):
            goal = random_formula(generator, 5)
            backward, forward = FriedmanTranslator.false_instantiation_equivalence(goal)
            translated = FriedmanTranslator.translate(goal, FalseC())

            self.assertTrue(ProofChecker.check_proof(Imp(translated, goal), backward, INTUITIONISTIC), str(goal))
            self.assertTrue(ProofChecker.check_proof(Imp(goal, translated), forward, INTUITIONISTIC), str(goal))

    def test_wrong_minimal_proof(self):
        goal = FormulaParser.parse("False => P")
        with self.assertRaises(ProofRejected):
            FriedmanTranslator.il_proof_from_translation(goal, ProofParser.parse_tree("(RightImp h (Axiom h))"))


if __name__ == '__main__':
    unittest.main()
