import glob
import os
import random
import unittest

from Tests.utils.utils import get_test_path, read_test_file
from e2p.core.ContextChecker import ContextViolation
from e2p.core.Models.EvidenceContext import EvidenceContext, EvidenceStructure, DomainDecl, HypDecl, \
    ConstConstraint, ApConstraint
from e2p.core.Models.EvidenceTerm import Var, Ap
from e2p.core.Models.FinitaryStructure import FinitaryStructure
from e2p.core.Models.Formula import Atom, FalseC, And, Or, Imp, All, Ex
from e2p.core.Models.Pattern import PVar
from e2p.core.Models.SemValue import AtomToken, VStar, VDomain, VPair, VInl, VInr, VTable
from e2p.core.Parsers.FormulaParser import FormulaParser
from e2p.core.Parsers.ProofParser import ProofParser
from e2p.core.Parsers.StructureParser import StructureParser
from e2p.core.Parsers.TermParser import TermParser
from e2p.core.ProofExtractor import ProofExtractor
from e2p.core.SemanticEvaluator import SemanticEvaluator, Membership, SampleOutcome, DomainTooSmall, \
    UnboundVariable

RELATIONS = [("P", 0), ("Q", 1), ("R", 2)]


def random_formula(generator, depth, bound=()):
    """
    A random minimal formula over P/0, Q/1 and R/2 whose free variables are in <bound>
    """
    if depth == 0 or generator.random() < 0.2:
        candidates = [(name, arity) for name, arity in RELATIONS if arity == 0 or bound]
        name, arity = generator.choice(candidates)
        return Atom(name, tuple(generator.choice(bound) for _ in range(arity)))
    shape = generator.choice([And, Or, Imp, All, Ex])
    if shape in (All, Ex):
        var = "x%d" % len(bound)
        return shape(var, random_formula(generator, depth - 1, bound + (var,)))
    return shape(random_formula(generator, depth - 1, bound), random_formula(generator, depth - 1, bound))


def m_triv_size(formula, domain_size, limit):
    """
    Size of M(formula) in m_triv, or limit + 1 once any part of it grows past limit
    """
    if isinstance(formula, Atom):
        return 1
    if isinstance(formula, FalseC):
        return 0
    if isinstance(formula, (All, Ex)):
        sizes = [m_triv_size(formula.body, domain_size, limit)]
    else:
        sizes = [m_triv_size(formula.left, domain_size, limit), m_triv_size(formula.right, domain_size, limit)]
    if any(size > limit for size in sizes):
        return limit + 1
    if isinstance(formula, And):
        size = sizes[0] * sizes[1]
    elif isinstance(formula, Or):
        size = sizes[0] + sizes[1]
    elif isinstance(formula, Imp):
        size = sizes[1] ** sizes[0]
    elif isinstance(formula, All):
        size = sizes[0] ** domain_size
    else:
        size = sizes[0] * domain_size
    return min(size, limit + 1)


class TestFormulaEvaluation(unittest.TestCase):
    """
    Class to test the evaluation of formulas in finitary structures
    """

    def setUp(self):
        self.structure = StructureParser.parse("domain=2; P=2; Q(0)=1; Q(1)=0; R=1")

    def test_eval_formula(self):
        self.assertEqual([AtomToken(0), AtomToken(1)], SemanticEvaluator.eval_formula(self.structure, Atom("P")))
        self.assertEqual([], SemanticEvaluator.eval_formula(self.structure, FalseC()))
        self.assertEqual([VInl(AtomToken(0)), VInl(AtomToken(1)), VInr(VStar())],
                         SemanticEvaluator.eval_formula(self.structure, Or(Atom("P"), Atom("S"))))
        self.assertEqual([VPair(VDomain(0), AtomToken(0))],
                         SemanticEvaluator.eval_formula(self.structure, FormulaParser.parse("ex x. Q(x)")))
        self.assertEqual([], SemanticEvaluator.eval_formula(self.structure, FormulaParser.parse("all x. Q(x)")))
        self.assertEqual([VTable(((AtomToken(0), AtomToken(0)), (AtomToken(1), AtomToken(0))))],
                         SemanticEvaluator.eval_formula(self.structure, Imp(Atom("P"), Atom("R"))))

    def test_unbound_variable(self):
        with self.assertRaises(UnboundVariable):
            SemanticEvaluator.eval_formula(self.structure, Atom("Q", ("x",)))
        self.assertEqual([AtomToken(0)],
                         SemanticEvaluator.eval_formula(self.structure, Atom("Q", ("x",)), {"x": VDomain(0)}))

    def test_cardinality_matches_enumeration(self):
        formulas = ["P => R", "P /\\ P \\/ R", "all x. Q(x) \\/ P", "ex x. ex y. R(x, y) => P",
                    "(P => R) => P", "P => False"]
        for text in formulas:
            formula = FormulaParser.parse(text)
            for structure in SemanticEvaluator.random_structures(formula, 2, 2, 5, seed=3):
                self.assertEqual(len(SemanticEvaluator.eval_formula(structure, formula)),
                                 SemanticEvaluator.cardinality(structure, formula), text)

    def test_cardinality_laws(self):
        p, r = Atom("P"), Atom("R")
        self.assertEqual(2, SemanticEvaluator.cardinality(self.structure, p))
        self.assertEqual(4, SemanticEvaluator.cardinality(self.structure, And(p, p)))
        self.assertEqual(3, SemanticEvaluator.cardinality(self.structure, Or(p, r)))
        self.assertEqual(1, SemanticEvaluator.cardinality(self.structure, Imp(p, r)))
        self.assertEqual(2, SemanticEvaluator.cardinality(self.structure, Imp(r, p)))
        self.assertEqual(1, SemanticEvaluator.cardinality(self.structure, Imp(FalseC(), FalseC())))
        self.assertEqual(1, SemanticEvaluator.cardinality(self.structure, FormulaParser.parse("ex x. Q(x)")))

    def test_value_in_type(self):
        structure = self.structure
        self.assertTrue(SemanticEvaluator.value_in_type(structure, AtomToken(1), Atom("P")))
        self.assertFalse(SemanticEvaluator.value_in_type(structure, AtomToken(2), Atom("P")))
        self.assertTrue(SemanticEvaluator.value_in_type(structure, VPair(VDomain(0), AtomToken(0)),
                                                        FormulaParser.parse("ex x. Q(x)")))
        self.assertFalse(SemanticEvaluator.value_in_type(structure, VPair(VDomain(1), AtomToken(0)),
                                                         FormulaParser.parse("ex x. Q(x)")))
        self.assertFalse(SemanticEvaluator.value_in_type(structure, VPair(VDomain(5), VStar()),
                                                         FormulaParser.parse("ex x. R(x, x)")))
        table = VTable(((AtomToken(0), AtomToken(0)), (AtomToken(1), AtomToken(0))))
        self.assertTrue(SemanticEvaluator.value_in_type(structure, table, Imp(Atom("P"), Atom("R"))))
        # a partial table is not a function
        self.assertFalse(SemanticEvaluator.value_in_type(structure, VTable(((AtomToken(0), AtomToken(0)),)),
                                                         Imp(Atom("P"), Atom("R"))))
        self.assertFalse(SemanticEvaluator.value_in_type(structure, VStar(), Imp(Atom("P"), Atom("R"))))

    def test_m_triv(self):
        model = SemanticEvaluator.m_triv(["d0", "d1"], 2)
        self.assertEqual({"d0": VDomain(0), "d1": VDomain(1)}, model.environment)
        self.assertEqual(VStar(), SemanticEvaluator.first_inhabitant(model, Atom("R", ("d0", "d1"))))

        # False is not a minimal formula
        self.assertEqual([], SemanticEvaluator.eval_formula(SemanticEvaluator.m_triv([], 1),
                                                            Imp(Atom("P"), FalseC())))
        with self.assertRaises(DomainTooSmall):
            SemanticEvaluator.m_triv(["d0", "d1"], 1)

    def test_m_triv_inhabits_minimal_formulas(self):
        generator = random.Random(0)
        for _ in range(500):
            formula = random_formula(generator, 5)
            for domain_size in (1, 2):
                model = SemanticEvaluator.m_triv([], domain_size)
                self.assertTrue(SemanticEvaluator.is_inhabited(model, formula), str(formula))
                if m_triv_size(formula, domain_size, 64) <= 64:
                    values = SemanticEvaluator.eval_formula(model, formula)
                    self.assertNotEqual([], values, str(formula))
                    self.assertEqual(SemanticEvaluator.cardinality(model, formula), len(values))
                    self.assertEqual(values[0], SemanticEvaluator.first_inhabitant(model, formula))

    def test_is_inhabited_agrees_with_enumeration(self):
        generator = random.Random(2)
        structures = [StructureParser.parse(text) for text in
                      ["domain=1; P=0", "domain=2; Q=0; R=0; R(0,1)=1", "domain=2; P=0; Q(1)=0; R=1"]]
        for _ in range(100):
            formula = random_formula(generator, 3)
            for structure in structures:
                inhabitant = SemanticEvaluator.first_inhabitant(structure, formula)
                self.assertEqual(SemanticEvaluator.is_inhabited(structure, formula), inhabitant is not None,
                                 str(formula))
                self.assertEqual(inhabitant is not None, SemanticEvaluator.cardinality(structure, formula) > 0)

    def test_empty_types_are_not_enumerated(self):
        two = Or(Atom("P"), Atom("P"))
        huge = Imp(Imp(two, two), Imp(two, two))
        model = SemanticEvaluator.m_triv([], 1)
        self.assertEqual([], SemanticEvaluator.eval_formula(model, And(huge, FalseC())))
        self.assertEqual([], SemanticEvaluator.eval_formula(model, Imp(huge, FalseC())))
        self.assertIsNone(SemanticEvaluator.first_inhabitant(model, All("x", Imp(huge, FalseC()))))

    def test_first_inhabitant_of_small_formulas(self):
        generator = random.Random(1)
        for _ in range(100):
            formula = random_formula(generator, 3)
            model = SemanticEvaluator.m_triv([], 2)
            value = SemanticEvaluator.first_inhabitant(model, formula)
            self.assertIsNotNone(value, str(formula))
            self.assertTrue(SemanticEvaluator.value_in_type(model, value, formula), str(formula))


class TestMembership(unittest.TestCase):
    """
    Class to test evidence membership and the sampling of structures
    """

    def setUp(self):
        self.excluded_middle = FormulaParser.parse(read_test_file("files/excludedmiddle.fol"))

    def test_check_membership(self):
        structure = StructureParser.parse("domain=2; P=2; R=1")
        parse = TermParser.parse
        self.assertEqual(Membership.MEMBER,
                         SemanticEvaluator.check_membership(structure, parse("\\x. x"), Imp(Atom("P"), Atom("P")), 100))
        self.assertEqual(Membership.NOT_MEMBER,
                         SemanticEvaluator.check_membership(structure, parse("\\x. x"), Imp(Atom("P"), Atom("R")), 100))
        self.assertEqual(Membership.MEMBER,
                         SemanticEvaluator.check_membership(structure, parse("\\d. \\p. p"),
                                                            FormulaParser.parse("all x. Q(x) => Q(x)"), 100))
        self.assertEqual(Membership.NOT_MEMBER,
                         SemanticEvaluator.check_membership(structure, parse("\\x. y"), Imp(Atom("P"), Atom("P")), 100))
        self.assertEqual(Membership.NOT_MEMBER,
                         SemanticEvaluator.check_membership(structure, parse("stuck"), Atom("R"), 100))

    def test_check_membership_inconclusive(self):
        omega = TermParser.parse(read_test_file("files/omega.evd"))
        self.assertEqual(Membership.INCONCLUSIVE,
                         SemanticEvaluator.check_membership(FinitaryStructure(), omega, Atom("P"), 100))

    def test_excluded_middle_counterexamples(self):
        expected = {
            "inl.evd": "domain=1; P=0; bot=0",
            "inr.evd": "domain=1; P=1; bot=0",
            "lam.evd": "domain=1; P=0; bot=0",
            "pair.evd": "domain=1; P=0; bot=0",
            "stuck.evd": "domain=1; P=0; bot=0",
        }
        for name, structure in expected.items():
            evidence = TermParser.parse(read_test_file("files/excludedmiddle/%s" % name))
            result = SemanticEvaluator.check_uniform_validity_sample(self.excluded_middle, evidence, 2, 2, 1000)

            self.assertEqual(SampleOutcome.COUNTEREXAMPLE, result.outcome, name)
            self.assertEqual(structure, str(result.structure), name)

    def test_corpus_is_uniformly_valid(self):
        for path in sorted(glob.glob(os.path.join(get_test_path("files/corpus"), "*.prf"))):
            proof_file = ProofParser.parse(read_test_file(os.path.join("files/corpus", os.path.basename(path))))
            evidence = ProofExtractor.extract(proof_file.tree, proof_file.goal)
            result = SemanticEvaluator.check_uniform_validity_sample(proof_file.goal, evidence, 2, 2, 100000)

            self.assertEqual(SampleOutcome.ALL_MEMBER, result.outcome, path)
            self.assertGreater(result.checked, 0)

    def test_omega_is_inconclusive(self):
        omega = TermParser.parse(read_test_file("files/omega.evd"))
        result = SemanticEvaluator.check_uniform_validity_sample(FormulaParser.parse("A => A"), omega, 1, 1, 100)

        self.assertEqual(SampleOutcome.INCONCLUSIVE, result.outcome)
        self.assertEqual(2, result.checked)

    def test_enumerate_structures(self):
        structures = list(SemanticEvaluator.enumerate_structures(self.excluded_middle, 1, 2))
        self.assertEqual(9, len(structures))
        self.assertEqual("domain=1; P=0; bot=0", str(structures[0]))
        self.assertEqual("domain=1; P=2; bot=2", str(structures[-1]))

        relation = FormulaParser.parse("ex x. R(x, x)")
        self.assertEqual(2 + 2 ** 4, len(list(SemanticEvaluator.enumerate_structures(relation, 2, 1))))

    def test_random_structures_are_reproducible(self):
        first = [str(structure) for structure in
                 SemanticEvaluator.random_structures(self.excluded_middle, 3, 2, 10, seed=7)]
        second = [str(structure) for structure in
                  SemanticEvaluator.random_structures(self.excluded_middle, 3, 2, 10, seed=7)]

        self.assertEqual(10, len(first))
        self.assertEqual(first, second)

    def test_given_structures(self):
        structures = [StructureParser.parse("domain=1; P=0; bot=1")]
        evidence = TermParser.parse("inr (\\x. x)")
        result = SemanticEvaluator.check_uniform_validity_sample(self.excluded_middle, evidence, 2, 2, 100,
                                                                 structures=structures)
        self.assertEqual(SampleOutcome.ALL_MEMBER, result.outcome)
        self.assertEqual(1, result.checked)


class TestContextModel(unittest.TestCase):
    """
    Class to test the models built for evidence contexts
    """

    def setUp(self):
        self.a = Atom("A")
        self.b = Atom("B")
        self.p = All("x", Atom("P", ("x",)))
        self.p_d0 = Atom("P", ("d0",))

    def test_empty_context(self):
        self.assertEqual(SemanticEvaluator.m_triv([], 1), SemanticEvaluator.build_context_model(EvidenceContext()))

    def test_const_constraint(self):
        context = EvidenceContext([HypDecl("v0", Imp(self.a, self.b)), HypDecl("v1", self.b),
                                   ConstConstraint("v0", PVar("v1", self.b))])
        model = SemanticEvaluator.build_context_model(context)

        self.assertEqual(VStar(), model.environment["v1"])
        self.assertEqual(VTable(((VStar(), VStar()),)), model.environment["v0"])
        self.assertTrue(SemanticEvaluator.satisfies_constraints(model, context))

    def test_ap_constraint(self):
        context = EvidenceContext([DomainDecl("d0"), HypDecl("v0", self.p), HypDecl("v1", self.p_d0),
                                   ApConstraint("v0", "d0", PVar("v1", self.p_d0))])
        model = SemanticEvaluator.build_context_model(context, 2)

        self.assertEqual(VDomain(0), model.environment["d0"])
        self.assertEqual(VTable(((VDomain(0), VStar()), (VDomain(1), VStar()))), model.environment["v0"])

        structure = EvidenceStructure(context, self.p_d0, Ap(Var("v0"), Var("d0")))
        self.assertEqual(Membership.MEMBER, SemanticEvaluator.check_structure_sample(structure, 2))

    def test_ill_formed_context(self):
        with self.assertRaises(ContextViolation):
            SemanticEvaluator.build_context_model(EvidenceContext([HypDecl("v0", self.a), HypDecl("v0", self.b)]))


if __name__ == '__main__':
    unittest.main()
