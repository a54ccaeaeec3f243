import logging

from lark import Lark, Transformer
from lark.exceptions import LarkError, VisitError

from e2p.core.Models.ProofTree import ProofTree, ProofRule
from e2p.core.Parsers.FormulaParser import FormulaParser, FormulaSyntaxError
from e2p.core.ProofChecker import LOGICS

logging.basicConfig()
logger = logging.getLogger("e2p")

PROOF_GRAMMAR = r"""
    ?start: node

    node: "(" NAME item* ")"

    ?item: NAME
         | FORMULA
         | node

    NAME: /[A-Za-z_][A-Za-z0-9_']*/
    FORMULA: /"[^"]*"/
    COMMENT: /#[^\n]*/

    %import common.WS
    %ignore WS
    %ignore COMMENT
"""


class ProofSyntaxError(Exception):
    """
    The text is not a proof file
    """
    pass


class ProofFile(object):
    """
    Content of a proof file: the goal, the optional logic line and the proof
    """

    def __init__(self, goal, tree, logic=None):
        self.goal = goal
        self.tree = tree
        self.logic = logic

    def serialize(self):
        return {
            'goal': str(self.goal),
            'logic': self.logic,
            'tree': str(self.tree)
        }

    def __str__(self):
        return str(self.serialize())

    def __eq__(self, other):
        return self.__dict__ == other.__dict__


class ProofTransformer(Transformer):
    """
    Build ProofTree nodes, reading rule names and parameters
    """

    def node(self, items):
        name, items = str(items[0]), items[1:]
        try:
            rule = ProofRule(name)
        except ValueError:
            raise ProofSyntaxError("unknown rule %s" % name)
        params = list()
        premises = list()
        for item in items:
            if isinstance(item, ProofTree):
                premises.append(item)
            elif premises:
                raise ProofSyntaxError("parameter %s of %s follows a premise" % (item, name))
            elif item.type == "FORMULA":
                params.append(FormulaParser.parse(str(item)[1:-1]))
            else:
                params.append(str(item))
        kinds = rule.parameters
        if len(params) != len(kinds):
            raise ProofSyntaxError("%s takes %d parameters, got %d" % (name, len(kinds), len(params)))
        for kind, param in zip(kinds, params):
            if (kind == "f") == isinstance(param, str):
                raise ProofSyntaxError("wrong parameter %s for %s" % (param, name))
        return ProofTree(rule, tuple(params), tuple(premises))


class ProofParser(object):
    """
    Read proof files:

        goal: A => A
        logic: minimal
        (RightImp h0
          (Axiom h0))

    The logic line is optional. Parameters come first, in the positional order of the rule, then the premises.
    A Cut formula is written between double quotes.
    """

    _parser = Lark(PROOF_GRAMMAR, parser="lalr")

    @classmethod
    def parse_tree(cls, text):
        """
        Parse a proof s-expression

        :rtype: ProofTree

        .. raises:: ProofSyntaxError
        """
        try:
            return ProofTransformer().transform(cls._parser.parse(text))
        except VisitError as e:
            if isinstance(e.orig_exc, (ProofSyntaxError, FormulaSyntaxError)):
                raise ProofSyntaxError(str(e.orig_exc))
            raise ProofSyntaxError("invalid proof: %s" % e.orig_exc)
        except LarkError as e:
            raise ProofSyntaxError("invalid proof: %s" % e)

    @classmethod
    def parse(cls, text):
        """
        Parse a whole proof file

        :param text: the file content
        :type text: str
        :return: the goal, the logic (None when absent) and the proof
        :rtype: ProofFile

        .. raises:: ProofSyntaxError, FormulaSyntaxError
        """
        lines = text.splitlines()
        while lines and not lines[0].strip():
            lines.pop(0)
        if not lines or not lines[0].startswith("goal:"):
            raise ProofSyntaxError("a proof file starts with a 'goal:' line")
        goal = FormulaParser.parse(lines.pop(0)[len("goal:"):])
        logic = None
        if lines and lines[0].startswith("logic:"):
            logic = lines.pop(0)[len("logic:"):].strip()
            if logic not in LOGICS:
                raise ProofSyntaxError("unknown logic %s" % logic)
        tree = cls.parse_tree("\n".join(lines))
        logger.debug("[ProofParser] parsed proof of %s with %d nodes" % (goal, tree.size()))
        return ProofFile(goal, tree, logic)
