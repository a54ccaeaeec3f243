import logging

from e2p.core.FormulaTools import FormulaTools
from e2p.core.Models.EvidenceTerm import Var, Pair, Inl, Inr, Lam, Ap, Spread, Decide, CbvAp, CbvPair, \
    PRINCIPAL_FIELD
from e2p.core.Models.Formula import And, Or, Imp, All, Ex
from e2p.core.Models.RuleId import RuleId
from e2p.core.TermAnalyser import TermAnalyser

logging.basicConfig()
logger = logging.getLogger("e2p")


class NoRuleMatches(Exception):
    """
    None of the sixteen rules applies: the evidence is not uniform evidence for the goal
    """

    def __init__(self, message, structure=None):
        if structure is not None:
            message = "%s\n  in structure: %s" % (message, structure)
        super(NoRuleMatches, self).__init__(message)
        self.structure = structure


class StuckEvidence(Exception):
    """
    The evidence computes to a term that is neither canonical nor blocked by a variable
    """

    def __init__(self, message, structure=None):
        if structure is not None:
            message = "%s\n  in structure: %s" % (message, structure)
        super(StuckEvidence, self).__init__(message)
        self.structure = structure


class RuleMatcher(object):
    """
    Select the rule that applies to an evidence structure whose evidence is computed to head shape.
    """

    @classmethod
    def match_rule(cls, structure):
        """
        Return the unique rule matching the structure, by the head shape of the evidence,
        the shape of the goal and the declarations and constraints of the context.

        :param structure: the evidence structure
        :type structure: EvidenceStructure
        :return: the rule to apply
        :rtype: RuleId

        :Example:

            RuleMatcher.match_rule(EvidenceStructure(EvidenceContext(), Imp(a, a), Lam("x", Var("x"))))  # ImpLam

        .. raises:: NoRuleMatches, StuckEvidence
        """
        evidence = structure.evidence
        if TermAnalyser.is_canonical(evidence):
            rule = cls._match_canonical(structure)
        elif isinstance(evidence, Var):
            rule = cls._match_variable(structure)
        else:
            rule = cls._match_principal(structure)
        logger.debug("[RuleMatcher] %s matches %s" % (structure, rule))
        return rule

    @staticmethod
    def _match_canonical(structure):
        evidence, goal = structure.evidence, structure.goal
        if isinstance(evidence, Pair):
            if isinstance(goal, And):
                return RuleId.AndPair
            if isinstance(goal, Ex):
                # a witness denotes an element of D, never a canonical form
                if TermAnalyser.is_canonical(evidence.left):
                    raise NoRuleMatches("%s cannot witness %s" % (TermAnalyser.head_name(evidence.left), goal),
                                        structure)
                return RuleId.ExPair
        elif isinstance(evidence, Inl) and isinstance(goal, Or):
            return RuleId.OrInl
        elif isinstance(evidence, Inr) and isinstance(goal, Or):
            return RuleId.OrInr
        elif isinstance(evidence, Lam):
            if isinstance(goal, Imp):
                return RuleId.ImpLam
            if isinstance(goal, All):
                return RuleId.AllLam
        raise NoRuleMatches("%s evidence cannot realize %s" % (TermAnalyser.head_name(evidence), goal), structure)

    @staticmethod
    def _match_variable(structure):
        name = structure.evidence.name
        declared = structure.context.type_of(name)
        if declared is None:
            raise NoRuleMatches("%s is not a declared evidence variable" % name, structure)
        if not FormulaTools.alpha_equal(declared, structure.goal):
            raise NoRuleMatches("%s has type %s, not %s" % (name, declared, structure.goal), structure)
        return RuleId.VarAx

    @classmethod
    def _match_principal(cls, structure):
        context = structure.context
        redex, _ = TermAnalyser.principal_redex(structure.evidence)
        if type(redex) not in PRINCIPAL_FIELD:
            raise StuckEvidence("evidence computes to %s" % TermAnalyser.head_name(redex), structure)
        principal = getattr(redex, PRINCIPAL_FIELD[type(redex)])
        if not isinstance(principal, Var):
            raise StuckEvidence("%s is stuck on %s" % (TermAnalyser.head_name(redex), principal), structure)
        name = principal.name
        declared = context.type_of(name)

        if isinstance(redex, Decide) and isinstance(declared, Or):
            return RuleId.DecideR
        if isinstance(redex, Spread) and isinstance(declared, And):
            return RuleId.AndSpread
        if isinstance(redex, Spread) and isinstance(declared, Ex):
            return RuleId.ExSpread
        if isinstance(redex, Ap) and isinstance(declared, Imp):
            if context.const_constraint(name) is not None:
                return RuleId.ApplyConst
            return RuleId.ImpApply
        if isinstance(redex, Ap) and isinstance(declared, All) and not TermAnalyser.is_canonical(redex.arg):
            return RuleId.AllApply
        if isinstance(redex, CbvAp) and context.declares_domain(name) and isinstance(redex.fun, Var) \
                and isinstance(context.type_of(redex.fun.name), All):
            if context.ap_constraint(redex.fun.name, name) is not None:
                return RuleId.ApplyModel
            return RuleId.AllCbv
        if isinstance(redex, CbvPair) and context.declares_domain(name) and isinstance(structure.goal, Ex):
            return RuleId.ExValPair
        raise NoRuleMatches("%s blocked on %s:%s has no rule for goal %s"
                            % (TermAnalyser.head_name(redex), name, declared if declared is not None else "D",
                               structure.goal), structure)
