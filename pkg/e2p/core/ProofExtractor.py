import logging

from e2p.core.Models.EvidenceTerm import Var, Pair, Inl, Inr, Lam, Ap, Spread, Decide
from e2p.core.Models.ProofTree import ProofRule
from e2p.core.ProofChecker import ProofChecker, MINIMAL
from e2p.core.TermAnalyser import TermAnalyser

logging.basicConfig()
logger = logging.getLogger("e2p")


class ProofExtractor(object):
    """
    Read evidence off a sequent calculus proof.
    """

    @classmethod
    def extract(cls, tree, goal=None, logic=MINIMAL):
        """
        Extract the evidence term of a proof, constructor for constructor.

        :param tree: the proof
        :type tree: ProofTree
        :param goal: when given, the proof is checked against it first
        :type goal: Formula
        :param logic: the logic used to check the proof
        :return: closed evidence for the goal
        :rtype: EvidenceTerm

        :Example:

            ProofExtractor.extract(proof(ProofRule.RightImp, "h0", premises=[proof(ProofRule.Axiom, "h0")]))
            # \\h0. h0

        .. raises:: ProofRejected
        """
        if goal is not None:
            ProofChecker.check_proof(goal, tree, logic)
        evidence = cls._extract(tree)
        logger.debug("[ProofExtractor] extracted %s" % evidence)
        return evidence

    @classmethod
    def _extract(cls, tree):
        rule, params = tree.rule, tree.params
        premises = [cls._extract(premise) for premise in tree.premises]
        if rule in (ProofRule.Axiom, ProofRule.FalseElim):
            # any term realizes False vacuously
            return Var(params[0])
        if rule is ProofRule.RightAnd:
            return Pair(premises[0], premises[1])
        if rule is ProofRule.RightOrL:
            return Inl(premises[0])
        if rule is ProofRule.RightOrR:
            return Inr(premises[0])
        if rule in (ProofRule.RightImp, ProofRule.RightAll):
            return Lam(params[0], premises[0])
        if rule is ProofRule.RightEx:
            return Pair(Var(params[0]), premises[0])
        if rule in (ProofRule.LeftAnd, ProofRule.LeftEx):
            label, x, y = params
            return Spread(Var(label), x, y, premises[0])
        if rule is ProofRule.LeftOr:
            label, x, y = params
            return Decide(Var(label), x, premises[0], y, premises[1])
        if rule is ProofRule.LeftImp:
            label, value = params
            return TermAnalyser.subst_term(premises[1], value, Ap(Var(label), premises[0]))
        if rule is ProofRule.LeftAll:
            label, point, value = params
            return TermAnalyser.subst_term(premises[0], value, Ap(Var(label), Var(point)))
        if rule is ProofRule.Cut:
            return Ap(Lam(params[1], premises[1]), premises[0])
        raise TypeError("unknown proof rule %s" % rule)

    @staticmethod
    def compose_cut(first, second):
        """
        Evidence for psi from evidence <first> for psi1 and evidence <second> for psi1 => psi

        :rtype: EvidenceTerm
        """
        return Ap(second, first)
