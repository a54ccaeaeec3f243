import logging

from lark import Lark, Transformer
from lark.exceptions import LarkError, VisitError

from e2p.core.Models.EvidenceTerm import Var, Pair, Inl, Inr, Lam, Ap, Spread, Decide, CbvAp, CbvPair, Stuck
from e2p.core.TermAnalyser import TermAnalyser
from e2p.core.Utils.Utils import Utils

logging.basicConfig()
logger = logging.getLogger("e2p")

TERM_GRAMMAR = r"""
    ?start: term

    ?term: "\\" NAME "." term                         -> lam
         | "let" NAME "=" term "in" term               -> let_
         | "let" NAME "," NAME "=" term "in" term      -> let_pair
         | "if" term "then" term "else" term           -> if_
         | application

    ?application: application prefixed -> ap
                | prefixed

    ?prefixed: "inl" atomic -> inl
             | "inr" atomic -> inr
             | "fst" atomic -> fst
             | "snd" atomic -> snd
             | atomic

    ?atomic: NAME                                                 -> var
           | "<" term "," term ">"                                 -> pair
           | "spread" "(" term ";" NAME "," NAME "." term ")"      -> spread
           | "decide" "(" term ";" NAME "." term ";" NAME "." term ")" -> decide
           | "cbv" "(" term ";" term ")"                           -> cbv
           | "cbvpair" "(" term ";" term ")"                       -> cbvpair
           | "stuck"                                               -> stuck
           | "(" term ")"

    NAME: /[A-Za-z_][A-Za-z0-9_']*/
    COMMENT: /#[^\n]*/

    %import common.WS
    %ignore WS
    %ignore COMMENT
"""


class TermSyntaxError(Exception):
    """
    The text is not an evidence term
    """
    pass


class TermTransformer(Transformer):
    """
    Build EvidenceTerm nodes from the parse tree, expanding the sugar into primitives
    """

    def var(self, items):
        return Var(str(items[0]))

    def lam(self, items):
        return Lam(str(items[0]), items[1])

    def ap(self, items):
        return Ap(items[0], items[1])

    def inl(self, items):
        return Inl(items[0])

    def inr(self, items):
        return Inr(items[0])

    def pair(self, items):
        return Pair(items[0], items[1])

    def spread(self, items):
        scrut, x, y, body = items
        return Spread(scrut, str(x), str(y), body)

    def decide(self, items):
        scrut, x, left, y, right = items
        return Decide(scrut, str(x), left, str(y), right)

    def cbv(self, items):
        return CbvAp(items[0], items[1])

    def cbvpair(self, items):
        return CbvPair(items[0], items[1])

    def stuck(self, items):
        return Stuck()

    # sugar
    def fst(self, items):
        return Spread(items[0], "x", "y", Var("x"))

    def snd(self, items):
        return Spread(items[0], "x", "y", Var("y"))

    def let_(self, items):
        name, value, body = items
        return Ap(Lam(str(name), body), value)

    def let_pair(self, items):
        x, y, value, body = items
        return Spread(value, str(x), str(y), body)

    def if_(self, items):
        condition, then, otherwise = items
        unused = Utils.fresh_name("_", TermAnalyser.free_vars(then) | TermAnalyser.free_vars(otherwise))
        return Decide(condition, unused, then, unused, otherwise)


class TermParser(object):
    """
    Read evidence terms such as

        \\h. \\x. \\p. h <x, p>

    Application is juxtaposition and associates to the left, a lambda body extends as far right as possible.
    fst, snd, let and if are expanded into spread, application and decide.
    """

    _parser = Lark(TERM_GRAMMAR, parser="lalr")

    @classmethod
    def parse(cls, text):
        """
        :param text: the term text
        :type text: str
        :return: the evidence term
        :rtype: EvidenceTerm

        :Example:

            TermParser.parse("let x, y = p in <y, x>")  # spread(p; x, y. <y, x>)

        .. raises:: TermSyntaxError
        """
        try:
            term = TermTransformer().transform(cls._parser.parse(text))
        except VisitError as e:
            raise TermSyntaxError("invalid evidence term: %s" % e.orig_exc)
        except LarkError as e:
            raise TermSyntaxError("invalid evidence term: %s" % e)
        logger.debug("[TermParser] parsed %s" % term)
        return term
