import logging

from e2p.core.FormulaTools import FormulaTools
from e2p.core.Models.Formula import Atom, FalseC, And, Or, Imp, All, Ex
from e2p.core.Models.ProofTree import ProofRule, proof
from e2p.core.ProofChecker import ProofChecker, MINIMAL, INTUITIONISTIC
from e2p.core.Utils.Utils import Utils

logging.basicConfig()
logger = logging.getLogger("e2p")

DEFAULT_PLACEHOLDER = "bot"


class NameSupply(object):
    """
    Indexed names that avoid a given set
    """

    def __init__(self, avoid=()):
        self.avoid = set(avoid)
        self.counter = 0

    def next(self, prefix):
        while True:
            name = "%s%d" % (prefix, self.counter)
            self.counter += 1
            if name not in self.avoid:
                self.avoid.add(name)
                return name


class FriedmanTranslator(object):
    """
    Intuitionistic proofs from minimal logic proofs of A-translated goals.

    The goal is translated with a fresh nullary atom standing for False, the evidence for that
    translation is turned into a minimal logic proof, and the proof is reread with the atom set to False.
    A cut against the equivalence between the False-translation and the goal closes the proof.
    """

    @staticmethod
    def placeholder_atom(goal, base=DEFAULT_PLACEHOLDER):
        """
        A nullary atom not used in <goal>, named <base> when possible

        :rtype: Atom
        """
        return Atom(FormulaTools.fresh_atom_name(goal, base))

    @classmethod
    def translate(cls, goal, placeholder):
        """
        Translate <goal> with the nullary atom <placeholder> (an Atom) or FalseC
        """
        return FormulaTools.a_translate(goal, placeholder)

    @classmethod
    def false_instantiation_equivalence(cls, goal, label="h"):
        """
        Intuitionistic proofs of goal^False => goal and goal => goal^False

        :param goal: closed formula
        :type goal: Formula
        :param label: preferred label of the assumed hypothesis
        :return: the two proofs
        :rtype: tuple(ProofTree, ProofTree)
        """
        supply = NameSupply(FormulaTools.all_names(goal) | {label})
        backward = proof(ProofRule.RightImp, label, premises=[cls._back(goal, label, supply)])
        forward = proof(ProofRule.RightImp, label, premises=[cls._forth(goal, label, supply)])
        return backward, forward

    @classmethod
    def _back(cls, formula, label, supply):
        """
        label:formula^False |- formula
        """
        if isinstance(formula, Atom):
            x, y = supply.next("u"), supply.next("u")
            return proof(ProofRule.LeftOr, label, x, y,
                         premises=[proof(ProofRule.Axiom, x), proof(ProofRule.FalseElim, y)])
        if isinstance(formula, FalseC):
            return proof(ProofRule.FalseElim, label)
        if isinstance(formula, And):
            x, y = supply.next("u"), supply.next("u")
            return proof(ProofRule.LeftAnd, label, x, y, premises=[
                proof(ProofRule.RightAnd, premises=[cls._back(formula.left, x, supply),
                                                    cls._back(formula.right, y, supply)])])
        if isinstance(formula, Or):
            x, y = supply.next("u"), supply.next("u")
            return proof(ProofRule.LeftOr, label, x, y, premises=[
                proof(ProofRule.RightOrL, premises=[cls._back(formula.left, x, supply)]),
                proof(ProofRule.RightOrR, premises=[cls._back(formula.right, y, supply)])])
        if isinstance(formula, Imp):
            x, y = supply.next("u"), supply.next("u")
            return proof(ProofRule.RightImp, x, premises=[
                proof(ProofRule.LeftImp, label, y, premises=[cls._forth(formula.left, x, supply),
                                                             cls._back(formula.right, y, supply)])])
        point, value = supply.next("e"), supply.next("u")
        instance = FormulaTools.instance(formula, point)
        if isinstance(formula, All):
            return proof(ProofRule.RightAll, point, premises=[
                proof(ProofRule.LeftAll, label, point, value, premises=[cls._back(instance, value, supply)])])
        return proof(ProofRule.LeftEx, label, point, value, premises=[
            proof(ProofRule.RightEx, point, premises=[cls._back(instance, value, supply)])])

    @classmethod
    def _forth(cls, formula, label, supply):
        """
        label:formula |- formula^False
        """
        if isinstance(formula, Atom):
            return proof(ProofRule.RightOrL, premises=[proof(ProofRule.Axiom, label)])
        if isinstance(formula, FalseC):
            return proof(ProofRule.Axiom, label)
        if isinstance(formula, And):
            x, y = supply.next("u"), supply.next("u")
            return proof(ProofRule.LeftAnd, label, x, y, premises=[
                proof(ProofRule.RightAnd, premises=[cls._forth(formula.left, x, supply),
                                                    cls._forth(formula.right, y, supply)])])
        if isinstance(formula, Or):
            x, y = supply.next("u"), supply.next("u")
            return proof(ProofRule.LeftOr, label, x, y, premises=[
                proof(ProofRule.RightOrL, premises=[cls._forth(formula.left, x, supply)]),
                proof(ProofRule.RightOrR, premises=[cls._forth(formula.right, y, supply)])])
        if isinstance(formula, Imp):
            x, y = supply.next("u"), supply.next("u")
            return proof(ProofRule.RightImp, x, premises=[
                proof(ProofRule.LeftImp, label, y, premises=[cls._back(formula.left, x, supply),
                                                             cls._forth(formula.right, y, supply)])])
        point, value = supply.next("e"), supply.next("u")
        instance = FormulaTools.instance(formula, point)
        if isinstance(formula, All):
            return proof(ProofRule.RightAll, point, premises=[
                proof(ProofRule.LeftAll, label, point, value, premises=[cls._forth(instance, value, supply)])])
        return proof(ProofRule.LeftEx, label, point, value, premises=[
            proof(ProofRule.RightEx, point, premises=[cls._forth(instance, value, supply)])])

    @classmethod
    def il_proof_from_translation(cls, goal, ml_proof, placeholder=DEFAULT_PLACEHOLDER):
        """
        Turn a minimal logic proof of goal^placeholder into an intuitionistic proof of goal.

        :param goal: closed formula, may use False
        :type goal: Formula
        :param ml_proof: minimal logic proof of the translation of goal with the atom <placeholder>
        :type ml_proof: ProofTree
        :param placeholder: name of the nullary atom used for the translation, absent from goal
        :type placeholder: str
        :return: an intuitionistic proof of goal
        :rtype: ProofTree

        .. raises:: ProofRejected
        """
        translated = cls.translate(goal, Atom(placeholder))
        ProofChecker.check_proof(translated, ml_proof, MINIMAL)
        false_proof = ml_proof.instantiate_atom(placeholder, FalseC())
        used = {param for node in ml_proof.nodes() for param in node.params if isinstance(param, str)}
        label = Utils.fresh_name("h", used | FormulaTools.all_names(goal))
        supply = NameSupply(FormulaTools.all_names(goal) | {label})
        il_proof = proof(ProofRule.Cut, cls.translate(goal, FalseC()), label,
                         premises=[false_proof, cls._back(goal, label, supply)])
        ProofChecker.check_proof(goal, il_proof, INTUITIONISTIC)
        logger.debug("[FriedmanTranslator] intuitionistic proof of %s built from %s" % (goal, translated))
        return il_proof
