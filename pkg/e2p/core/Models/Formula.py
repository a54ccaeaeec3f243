from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class Formula:
    """
    First order formula over a single domain D.

    Atom arguments are domain variable names. Negation has no node of its own: ~A is Imp(A, FalseC()).
    """

    def __str__(self):
        return FormulaPrinter.print_formula(self)


@dataclass(frozen=True)
class Atom(Formula):
    name: str
    args: Tuple[str, ...] = ()


@dataclass(frozen=True)
class FalseC(Formula):
    pass


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Imp(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class All(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Ex(Formula):
    var: str
    body: Formula


def Not(formula):
    return Imp(formula, FalseC())


class Language(object):
    """
    The relation symbols of a formula with their arity
    """

    def __init__(self, relations=None):
        self.relations = relations if relations is not None else dict()

    def arity(self, name):
        return self.relations.get(name)

    def serialize(self):
        return {
            'relations': dict(self.relations)
        }

    def __str__(self):
        return str(self.serialize())

    def __eq__(self, other):
        return self.__dict__ == other.__dict__


# binding strength used by the printer. quantifiers and => share the loosest level:
# a quantifier extends as far right as possible so it may only stand where an implication may.
PREC_IMP = 1
PREC_OR = 2
PREC_AND = 3
PREC_NOT = 4
PREC_ATOM = 5


class FormulaPrinter(object):
    """
    Canonical text rendering of formulas, the inverse of FormulaParser
    """

    @classmethod
    def print_formula(cls, formula):
        """
        Render a formula in the canonical concrete syntax.

        :param formula: the formula to render
        :type formula: Formula
        :return: the text, parsable by FormulaParser
        :rtype: str

        :Example:

            FormulaPrinter.print_formula(Imp(Atom("A"), Atom("A")))  # "A => A"
        """
        return cls._print(formula, PREC_IMP)

    @classmethod
    def _print(cls, formula, context):
        text, own = cls._render(formula)
        if own < context:
            return "(%s)" % text
        return text

    @classmethod
    def _render(cls, formula):
        if isinstance(formula, Atom):
            if formula.args:
                return "%s(%s)" % (formula.name, ", ".join(formula.args)), PREC_ATOM
            return formula.name, PREC_ATOM
        if isinstance(formula, FalseC):
            return "False", PREC_ATOM
        if isinstance(formula, Imp) and isinstance(formula.right, FalseC):
            return "~" + cls._print(formula.left, PREC_NOT), PREC_NOT
        if isinstance(formula, And):
            return "%s /\\ %s" % (cls._print(formula.left, PREC_AND),
                                  cls._print(formula.right, PREC_NOT)), PREC_AND
        if isinstance(formula, Or):
            return "%s \\/ %s" % (cls._print(formula.left, PREC_OR),
                                  cls._print(formula.right, PREC_AND)), PREC_OR
        if isinstance(formula, Imp):
            return "%s => %s" % (cls._print(formula.left, PREC_OR),
                                 cls._print(formula.right, PREC_IMP)), PREC_IMP
        if isinstance(formula, All):
            return "all %s. %s" % (formula.var, cls._print(formula.body, PREC_IMP)), PREC_IMP
        if isinstance(formula, Ex):
            return "ex %s. %s" % (formula.var, cls._print(formula.body, PREC_IMP)), PREC_IMP
        raise TypeError("not a formula: %r" % (formula,))
