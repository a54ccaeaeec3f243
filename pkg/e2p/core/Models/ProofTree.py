from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from e2p.core.FormulaTools import FormulaTools
from e2p.core.Models.Formula import Formula


class ProofRule(Enum):
    """
    Rules of the sequent calculus for minimal logic, plus FalseElim (intuitionistic only) and Cut
    """
    Axiom = "Axiom"
    RightAnd = "RightAnd"
    RightOrL = "RightOrL"
    RightOrR = "RightOrR"
    RightImp = "RightImp"
    RightAll = "RightAll"
    RightEx = "RightEx"
    LeftAnd = "LeftAnd"
    LeftOr = "LeftOr"
    LeftImp = "LeftImp"
    LeftAll = "LeftAll"
    LeftEx = "LeftEx"
    FalseElim = "FalseElim"
    Cut = "Cut"

    @property
    def premises(self):
        return PREMISES.get(self, 1)

    @property
    def parameters(self):
        """
        Parameter kinds in their positional order: 'h' a hypothesis label, 'd' a domain variable, 'f' a formula
        """
        return PARAMETERS[self]

    def __str__(self):
        return self.value


PREMISES = {
    ProofRule.Axiom: 0,
    ProofRule.FalseElim: 0,
    ProofRule.RightAnd: 2,
    ProofRule.LeftOr: 2,
    ProofRule.LeftImp: 2,
    ProofRule.Cut: 2,
}

PARAMETERS = {
    ProofRule.Axiom: "h",
    ProofRule.RightAnd: "",
    ProofRule.RightOrL: "",
    ProofRule.RightOrR: "",
    ProofRule.RightImp: "h",
    ProofRule.RightAll: "d",
    ProofRule.RightEx: "d",
    ProofRule.LeftAnd: "hhh",
    ProofRule.LeftOr: "hhh",
    ProofRule.LeftImp: "hh",
    ProofRule.LeftAll: "hdh",
    ProofRule.LeftEx: "hdh",
    ProofRule.FalseElim: "h",
    ProofRule.Cut: "fh",
}


@dataclass(frozen=True)
class ProofTree:
    """
    A sequent calculus proof stored as rules and parameters only.
    The sequents are rebuilt from the root goal by the ProofChecker.
    """
    rule: ProofRule
    params: Tuple = ()
    premises: Tuple["ProofTree", ...] = ()

    def nodes(self):
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.premises))

    def size(self):
        return sum(1 for _ in self.nodes())

    def rule_counts(self):
        """
        :return: how many times each rule is used
        :rtype: Counter
        """
        return Counter(node.rule for node in self.nodes())

    def instantiate_atom(self, name, replacement):
        """
        Replace the nullary atom <name> by <replacement> in every formula parameter (Cut formulas)
        """
        params = tuple(FormulaTools.instantiate_atom(param, name, replacement) if isinstance(param, Formula)
                       else param for param in self.params)
        return ProofTree(self.rule, params,
                         tuple(premise.instantiate_atom(name, replacement) for premise in self.premises))

    def serialize(self):
        return {
            'rule': self.rule.value,
            'params': [str(param) for param in self.params],
            'premises': [premise.serialize() for premise in self.premises]
        }

    def __str__(self):
        return ProofPrinter.print_inline(self)


def proof(rule, *params, premises=()):
    """
    Shortcut to build a ProofTree: proof(ProofRule.RightImp, "h0", premises=[proof(ProofRule.Axiom, "h0")])
    """
    return ProofTree(rule, tuple(params), tuple(premises))


class ProofPrinter(object):
    """
    Canonical s-expression rendering of proofs, the inverse of ProofParser
    """

    INDENT = "  "

    @classmethod
    def print_proof(cls, tree, goal, logic=None):
        """
        Render a whole proof file: the goal header, the optional logic line and the indented tree

        :param tree: the proof
        :type tree: ProofTree
        :param goal: the proved formula
        :type goal: Formula
        :param logic: "minimal", "intuitionistic" or None to omit the line
        :return: the file content, ending with a new line
        :rtype: str
        """
        lines = ["goal: %s" % goal]
        if logic is not None:
            lines.append("logic: %s" % logic)
        cls._lines(tree, 0, lines)
        return "\n".join(lines) + "\n"

    @classmethod
    def _lines(cls, tree, depth, lines):
        lines.append("%s(%s" % (cls.INDENT * depth, cls._head(tree)))
        for premise in tree.premises:
            cls._lines(premise, depth + 1, lines)
        lines[-1] += ")"

    @classmethod
    def print_inline(cls, tree):
        if not tree.premises:
            return "(%s)" % cls._head(tree)
        return "(%s %s)" % (cls._head(tree), " ".join(cls.print_inline(premise) for premise in tree.premises))

    @staticmethod
    def _head(tree):
        words = [tree.rule.value]
        for param in tree.params:
            if isinstance(param, Formula):
                words.append('"%s"' % param)
            else:
                words.append(param)
        return " ".join(words)
