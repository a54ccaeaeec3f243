import logging

from lark import Lark, Transformer
from lark.exceptions import LarkError, VisitError

from e2p.core.FormulaTools import FormulaTools
from e2p.core.Models.Formula import Atom, FalseC, And, Or, Imp, All, Ex, Not

logging.basicConfig()
logger = logging.getLogger("e2p")

FORMULA_GRAMMAR = r"""
    ?start: implication

    ?implication: disjunction "=>" implication -> imp
                | disjunction
                | quantified

    ?quantified: "all" NAME "." implication -> forall
               | "ex" NAME "." implication -> exists

    ?disjunction: disjunction "\\/" conjunction -> or_
                | conjunction

    ?conjunction: conjunction "/\\" negation -> and_
                | negation

    ?negation: "~" negation -> not_
             | primary

    ?primary: atom
            | "False" -> false
            | "(" implication ")"

    atom: NAME
        | NAME "(" NAME ("," NAME)* ")"

    NAME: /[A-Za-z_][A-Za-z0-9_']*/
    COMMENT: /#[^\n]*/

    %import common.WS
    %ignore WS
    %ignore COMMENT
"""


class FormulaSyntaxError(Exception):
    """
    The text is not a formula
    """
    pass


class FormulaTransformer(Transformer):
    """
    Build Formula nodes from the parse tree
    """

    def imp(self, items):
        return Imp(items[0], items[1])

    def or_(self, items):
        return Or(items[0], items[1])

    def and_(self, items):
        return And(items[0], items[1])

    def not_(self, items):
        return Not(items[0])

    def false(self, items):
        return FalseC()

    def forall(self, items):
        return All(str(items[0]), items[1])

    def exists(self, items):
        return Ex(str(items[0]), items[1])

    def atom(self, items):
        return Atom(str(items[0]), tuple(str(item) for item in items[1:]))


class FormulaParser(object):
    """
    Read formulas written as

        all x. ex y. R(x, y) /\\ ~Q => (P \\/ False)

    => is right associative, /\\ and \\/ are left associative, quantifiers extend as far right as possible.
    """

    _parser = Lark(FORMULA_GRAMMAR, parser="lalr")

    @classmethod
    def parse(cls, text):
        """
        Parse a formula and check that every relation is used with a single arity

        :param text: the formula text
        :type text: str
        :return: the formula
        :rtype: Formula

        :Example:

            FormulaParser.parse("all x. P(x) => P(x)")

        .. raises:: FormulaSyntaxError, ArityMismatch
        """
        try:
            formula = FormulaTransformer().transform(cls._parser.parse(text))
        except VisitError as e:
            raise FormulaSyntaxError("invalid formula: %s" % e.orig_exc)
        except LarkError as e:
            raise FormulaSyntaxError("invalid formula: %s" % e)
        FormulaTools.language_of(formula)
        logger.debug("[FormulaParser] parsed %s" % formula)
        return formula
