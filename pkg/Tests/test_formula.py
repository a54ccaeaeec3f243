import unittest

from e2p.core.FormulaTools import FormulaTools, ArityMismatch, NotClosedFormula
from e2p.core.Models.Formula import Atom, FalseC, And, Or, Imp, All, Ex, Not, Language
from e2p.core.Parsers.FormulaParser import FormulaParser


class TestFormula(unittest.TestCase):
    """
    Class to test the formula models and FormulaTools
    """

    def setUp(self):
        self.a = Atom("A")
        self.b = Atom("B")
        self.p_x = Atom("P", ("x",))
        self.r_xy = Atom("R", ("x", "y"))

    def test_not_is_an_implication(self):
        self.assertEqual(Not(self.a), Imp(self.a, FalseC()))

    def test_print_formula(self):
        formulas = {
            Imp(self.a, Imp(self.b, self.a)): "A => B => A",
            Imp(Imp(self.a, self.b), self.a): "(A => B) => A",
            And(Or(self.a, self.b), self.a): "(A \\/ B) /\\ A",
            Or(self.a, And(self.b, self.a)): "A \\/ B /\\ A",
            Not(Not(self.a)): "~~A",
            Not(And(self.a, self.b)): "~(A /\\ B)",
            Imp(Ex("x", self.p_x), Atom("bot")): "(ex x. P(x)) => bot",
            All("x", Imp(self.p_x, Atom("bot"))): "all x. P(x) => bot",
            All("x", Ex("y", self.r_xy)): "all x. ex y. R(x, y)",
            FalseC(): "False",
        }
        for formula, expected in formulas.items():
            self.assertEqual(expected, str(formula))

    def test_free_domain_vars(self):
        self.assertEqual(frozenset(["x", "y"]), FormulaTools.free_domain_vars(self.r_xy))
        self.assertEqual(frozenset(["x"]), FormulaTools.free_domain_vars(Ex("y", self.r_xy)))
        self.assertEqual(frozenset(), FormulaTools.free_domain_vars(All("x", Ex("y", self.r_xy))))
        self.assertTrue(FormulaTools.is_closed(Imp(self.a, self.a)))
        self.assertFalse(FormulaTools.is_closed(self.p_x))

    def test_all_names(self):
        self.assertEqual({"x", "y"}, FormulaTools.all_names(All("x", Ex("y", self.r_xy))))
        self.assertEqual(set(), FormulaTools.all_names(Imp(self.a, FalseC())))

    def test_subst_domain_var(self):
        self.assertEqual(Atom("P", ("d0",)), FormulaTools.subst_domain_var(self.p_x, "x", "d0"))
        # bound occurrences are left alone
        self.assertEqual(All("x", self.p_x), FormulaTools.subst_domain_var(All("x", self.p_x), "x", "d0"))
        self.assertEqual(Ex("y", Atom("R", ("d1", "y"))),
                         FormulaTools.subst_domain_var(Ex("y", self.r_xy), "x", "d1"))

    def test_subst_domain_var_avoids_capture(self):
        formula = Ex("d1", Atom("R", ("x", "d1")))
        result = FormulaTools.subst_domain_var(formula, "x", "d1")

        self.assertEqual(Ex("d1_1", Atom("R", ("d1", "d1_1"))), result)
        self.assertEqual(frozenset(["d1"]), FormulaTools.free_domain_vars(result))

    def test_instance(self):
        self.assertEqual(Imp(Atom("P", ("d0",)), Atom("bot")),
                         FormulaTools.instance(All("x", Imp(self.p_x, Atom("bot"))), "d0"))

    def test_alpha_equal(self):
        self.assertTrue(FormulaTools.alpha_equal(All("x", self.p_x), All("z", Atom("P", ("z",)))))
        self.assertTrue(FormulaTools.alpha_equal(All("x", Ex("y", self.r_xy)),
                                                 All("u", Ex("v", Atom("R", ("u", "v"))))))
        self.assertFalse(FormulaTools.alpha_equal(All("x", Ex("y", self.r_xy)),
                                                  All("u", Ex("v", Atom("R", ("v", "u"))))))
        # free variables must match by name
        self.assertFalse(FormulaTools.alpha_equal(self.p_x, Atom("P", ("y",))))
        self.assertFalse(FormulaTools.alpha_equal(And(self.a, self.b), Or(self.a, self.b)))

    def test_is_minimal(self):
        self.assertTrue(FormulaTools.is_minimal(Imp(self.a, Atom("bot"))))
        self.assertFalse(FormulaTools.is_minimal(Not(self.a)))
        self.assertFalse(FormulaTools.is_minimal(All("x", Or(self.p_x, FalseC()))))

    def test_language_of(self):
        formula = FormulaParser.parse("all x. ex y. R(x, y) /\\ ~Q => (P \\/ False)")
        self.assertEqual(Language({"R": 2, "Q": 0, "P": 0}), FormulaTools.language_of(formula))

        with self.assertRaises(ArityMismatch):
            FormulaTools.language_of(Imp(Atom("P", ("x",)), Atom("P")))

    def test_size(self):
        self.assertEqual(1, FormulaTools.size(self.a))
        self.assertEqual(6, FormulaTools.size(All("x", Imp(self.p_x, Not(self.a)))))

    def test_a_translate(self):
        bot = Atom("bot")
        self.assertEqual(Imp(bot, Or(Atom("P"), bot)),
                         FormulaTools.a_translate(Imp(FalseC(), Atom("P")), bot))
        self.assertEqual(All("x", Imp(Or(self.p_x, bot), bot)),
                         FormulaTools.a_translate(All("x", Not(self.p_x)), bot))
        # False stands for itself
        self.assertEqual(Or(self.a, FalseC()), FormulaTools.a_translate(self.a, FalseC()))

        with self.assertRaises(NotClosedFormula):
            FormulaTools.a_translate(self.a, self.p_x)

    def test_a_translation_is_minimal(self):
        formula = FormulaParser.parse("~~~P => (all x. ~Q(x)) \\/ False")
        self.assertTrue(FormulaTools.is_minimal(FormulaTools.a_translate(formula, Atom("bot"))))

    def test_instantiate_atom(self):
        formula = Imp(Or(Atom("P"), Atom("bot")), Atom("bot"))
        self.assertEqual(Imp(Or(Atom("P"), FalseC()), FalseC()),
                         FormulaTools.instantiate_atom(formula, "bot", FalseC()))
        # only nullary atoms are replaced
        self.assertEqual(Atom("bot", ("x",)), FormulaTools.instantiate_atom(Atom("bot", ("x",)), "bot", FalseC()))

    def test_fresh_atom_name(self):
        self.assertEqual("bot", FormulaTools.fresh_atom_name(Imp(self.a, self.a), "bot"))
        self.assertEqual("bot_1", FormulaTools.fresh_atom_name(Imp(Atom("bot"), self.a), "bot"))


if __name__ == '__main__':
    unittest.main()
