import unittest

from e2p.core.ContextChecker import ContextChecker, UndeclaredVariable, DuplicateDeclaration, \
    DuplicateConstraint, StratificationBreach, PatternTypeMismatch
from e2p.core.ContextEditor import ContextEditor, IncompatiblePattern
from e2p.core.Models.EvidenceContext import EvidenceContext, EvidenceStructure, DomainDecl, HypDecl, \
    ConstConstraint, ApConstraint
from e2p.core.Models.EvidenceTerm import Var, Pair, Inl
from e2p.core.Models.Formula import Atom, And, Or, Imp, All, Ex
from e2p.core.Models.Pattern import PVar, PDomain, PPair, PInl, PInr


class TestEvidenceContext(unittest.TestCase):
    """
    Class to test EvidenceContext
    """

    def setUp(self):
        self.a = Atom("A")

    def test_lookup(self):
        context = EvidenceContext([DomainDecl("d0"), HypDecl("v0", Atom("P", ("d0",)))])

        self.assertEqual(Atom("P", ("d0",)), context.type_of("v0"))
        self.assertIsNone(context.type_of("d0"))
        self.assertTrue(context.declares_domain("d0"))
        self.assertFalse(context.declares_domain("v0"))
        self.assertTrue(context.declares("v0"))
        self.assertEqual(1, context.position("v0"))
        self.assertEqual(["d0"], context.domain_vars())
        self.assertEqual(2, len(context))

    def test_fresh_names_exceed_declarations(self):
        context = EvidenceContext([HypDecl("v3", self.a), DomainDecl("d1")])

        name, context = context.fresh_evidence_var()
        self.assertEqual("v4", name)
        name, context = context.fresh_evidence_var()
        self.assertEqual("v5", name)
        name, context = context.fresh_domain_var()
        self.assertEqual("d2", name)

    def test_fresh_counter_survives_removed_entries(self):
        context = EvidenceContext([HypDecl("v0", self.a)])
        _, context = context.fresh_evidence_var()
        context = context.replace_entries([])

        name, _ = context.fresh_evidence_var()
        self.assertEqual("v2", name)

    def test_extend_keeps_the_original(self):
        context = EvidenceContext([HypDecl("v0", self.a)])
        extended = context.extend(HypDecl("v1", self.a))

        self.assertEqual(1, len(context))
        self.assertEqual(2, len(extended))

    def test_constraints_lookup(self):
        context = EvidenceContext([HypDecl("v0", Imp(self.a, self.a)), HypDecl("v1", self.a),
                                   ConstConstraint("v0", PVar("v1", self.a))])
        self.assertEqual(PVar("v1", self.a), context.const_constraint("v0"))
        self.assertIsNone(context.const_constraint("v1"))
        self.assertIsNone(context.ap_constraint("v0", "d0"))
        self.assertEqual("v0:A => A; v1:A; v0 = const(v1)", str(context))


class TestContextChecker(unittest.TestCase):
    """
    Class to test ContextChecker
    """

    def setUp(self):
        self.a = Atom("A")
        self.b = Atom("B")
        self.p_d0 = Atom("P", ("d0",))

    def test_wellformed(self):
        contexts = [
            EvidenceContext(),
            EvidenceContext([HypDecl("v0", Imp(self.a, self.b)), HypDecl("v1", self.b),
                             ConstConstraint("v0", PVar("v1", self.b))]),
            EvidenceContext([DomainDecl("d0"), HypDecl("v0", All("x", Atom("P", ("x",)))),
                             HypDecl("v1", self.p_d0), ApConstraint("v0", "d0", PVar("v1", self.p_d0))]),
            EvidenceContext([HypDecl("v0", Imp(self.a, Or(self.a, self.b))), HypDecl("v2", self.a),
                             ConstConstraint("v0", PInl(PVar("v2", self.a)))]),
            EvidenceContext([HypDecl("v0", Imp(self.a, Ex("x", Atom("P", ("x",))))), DomainDecl("d0"),
                             HypDecl("v1", self.p_d0), ConstConstraint("v0", PPair(PDomain("d0"), PVar("v1")))]),
        ]
        for context in contexts:
            self.assertTrue(ContextChecker.check_wellformed(context), str(context))

    def test_undeclared_variable(self):
        with self.assertRaises(UndeclaredVariable) as context:
            ContextChecker.check_wellformed(EvidenceContext([HypDecl("v0", self.p_d0), DomainDecl("d0")]))
        self.assertEqual(0, context.exception.position)

        with self.assertRaises(UndeclaredVariable):
            ContextChecker.check_wellformed(EvidenceContext([
                HypDecl("v0", All("x", Atom("P", ("x",)))), HypDecl("v1", Atom("P", ("d1",)))]))

        with self.assertRaises(UndeclaredVariable):
            ContextChecker.check_wellformed(EvidenceContext([
                HypDecl("v0", Imp(self.a, self.b)), ConstConstraint("v0", PVar("v1", self.b))]))

    def test_duplicate_declaration(self):
        with self.assertRaises(DuplicateDeclaration) as context:
            ContextChecker.check_wellformed(EvidenceContext([HypDecl("v0", self.a), HypDecl("v0", self.b)]))
        self.assertEqual(1, context.exception.position)

    def test_duplicate_constraint(self):
        with self.assertRaises(DuplicateConstraint) as context:
            ContextChecker.check_wellformed(EvidenceContext([
                HypDecl("v0", Imp(self.a, self.b)), HypDecl("v1", self.b), HypDecl("v2", self.b),
                ConstConstraint("v0", PVar("v1", self.b)), ConstConstraint("v0", PVar("v2", self.b))]))
        self.assertEqual(4, context.exception.position)

    def test_stratification_breach(self):
        with self.assertRaises(StratificationBreach):
            ContextChecker.check_wellformed(EvidenceContext([
                HypDecl("v1", Imp(self.a, self.b)), HypDecl("v0", self.b),
                ConstConstraint("v1", PVar("v0", self.b))]))

    def test_pattern_type_mismatch(self):
        with self.assertRaises(PatternTypeMismatch):
            ContextChecker.check_wellformed(EvidenceContext([
                HypDecl("v0", Imp(self.a, self.b)), HypDecl("v1", self.a), ConstConstraint("v0", PVar("v1"))]))

        # a const constraint needs an implication
        with self.assertRaises(PatternTypeMismatch):
            ContextChecker.check_wellformed(EvidenceContext([
                DomainDecl("d0"), HypDecl("v0", All("x", Atom("P", ("x",)))), HypDecl("v1", self.p_d0),
                ConstConstraint("v0", PVar("v1"))]))

        with self.assertRaises(PatternTypeMismatch):
            ContextChecker.check_wellformed(EvidenceContext([
                HypDecl("v0", Imp(self.a, And(self.a, self.b))), HypDecl("v1", self.a),
                ConstConstraint("v0", PInr(PVar("v1")))]))


class TestContextEditor(unittest.TestCase):
    """
    Class to test ContextEditor
    """

    def setUp(self):
        self.a = Atom("A")
        self.b = Atom("B")

    def test_subst_pair_in_place(self):
        context = EvidenceContext([HypDecl("v0", And(self.a, self.b)), HypDecl("v1", self.a)])
        structure = EvidenceStructure(context, self.a, Pair(Var("v0"), Var("v1")))

        result = ContextEditor.subst_in_structure(structure, "v0", PPair(PVar("v2", self.a), PVar("v3", self.b)))

        self.assertEqual((HypDecl("v2", self.a), HypDecl("v3", self.b), HypDecl("v1", self.a)),
                         result.context.entries)
        self.assertEqual(Pair(Pair(Var("v2"), Var("v3")), Var("v1")), result.evidence)
        self.assertEqual(self.a, result.goal)

    def test_subst_rewrites_constraints(self):
        either = Or(self.a, self.b)
        context = EvidenceContext([HypDecl("v0", Imp(self.a, either)), HypDecl("v1", either),
                                   ConstConstraint("v0", PVar("v1", either))])
        structure = EvidenceStructure(context, either, Var("v1"))

        result = ContextEditor.subst_in_structure(structure, "v1", PInl(PVar("v2", self.a)))

        self.assertEqual((HypDecl("v0", Imp(self.a, either)), HypDecl("v2", self.a),
                          ConstConstraint("v0", PInl(PVar("v2", self.a)))), result.context.entries)
        self.assertEqual(Inl(Var("v2")), result.evidence)
        self.assertTrue(ContextChecker.check_wellformed(result.context))

    def test_subst_witness(self):
        p_d0 = Atom("P", ("d0",))
        context = EvidenceContext([HypDecl("v0", Ex("x", Atom("P", ("x",))))])
        structure = EvidenceStructure(context, self.a, Var("v0"))

        result = ContextEditor.subst_in_structure(structure, "v0", PPair(PDomain("d0"), PVar("v1", p_d0)))

        self.assertEqual((DomainDecl("d0"), HypDecl("v1", p_d0)), result.context.entries)
        self.assertTrue(ContextChecker.check_wellformed(result.context))

    def test_incompatible_pattern(self):
        context = EvidenceContext([HypDecl("v0", And(self.a, self.b))])
        structure = EvidenceStructure(context, self.a, Var("v0"))

        with self.assertRaises(IncompatiblePattern):
            ContextEditor.subst_in_structure(structure, "v0", PInl(PVar("v1", self.a)))
        with self.assertRaises(IncompatiblePattern):
            ContextEditor.subst_in_structure(structure, "v0", PPair(PVar("v1", self.b), PVar("v2", self.b)))
        with self.assertRaises(IncompatiblePattern):
            ContextEditor.subst_in_structure(structure, "v9", PVar("v1", self.a))


if __name__ == '__main__':
    unittest.main()
