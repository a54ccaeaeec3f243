import logging

from e2p.core.ContextEditor import ContextEditor
from e2p.core.FormulaTools import FormulaTools
from e2p.core.Models.DerivationStep import DerivationStep
from e2p.core.Models.EvidenceContext import EvidenceStructure, DomainDecl, HypDecl, ConstConstraint, \
    ApConstraint
from e2p.core.Models.EvidenceTerm import Var, CbvAp, CbvPair
from e2p.core.Models.Pattern import PVar, PDomain, PPair, PInl, PInr
from e2p.core.Models.ProofTree import ProofRule
from e2p.core.Models.RuleId import RuleId
from e2p.core.TermAnalyser import TermAnalyser

logging.basicConfig()
logger = logging.getLogger("e2p")


class RuleLauncher(object):
    """
    Apply one of the sixteen rules to an evidence structure and return the derived structures.
    """

    @classmethod
    def apply_rule(cls, structure, rule):
        """
        Build the children of <structure> for <rule> and the sequent calculus step they stand for.

        :param structure: the evidence structure, matched by RuleMatcher
        :type structure: EvidenceStructure
        :param rule: the rule returned by RuleMatcher.match_rule
        :type rule: RuleId
        :return: the derivation step
        :rtype: DerivationStep

        .. raises:: IncompatiblePattern
        .. warnings:: Class Method and Public
        """
        logger.debug("[RuleLauncher] apply %s on %s" % (rule, structure))
        launcher = getattr(cls, "_apply_%s" % rule.value)
        return launcher(structure)

    ##################
    #
    # Canonical evidence
    #
    #########
    @staticmethod
    def _apply_AndPair(structure):
        context, goal, evidence = structure.context, structure.goal, structure.evidence
        children = [EvidenceStructure(context, goal.left, evidence.left),
                    EvidenceStructure(context, goal.right, evidence.right)]
        return DerivationStep(RuleId.AndPair, structure, children, ProofRule.RightAnd)

    @staticmethod
    def _apply_ExPair(structure):
        evidence = structure.evidence
        child = structure.with_evidence(CbvPair(evidence.left, evidence.right))
        return DerivationStep(RuleId.ExPair, structure, [child])

    @staticmethod
    def _apply_ExValPair(structure):
        witness = structure.evidence.first.name
        child = EvidenceStructure(structure.context, FormulaTools.instance(structure.goal, witness),
                                  structure.evidence.second)
        return DerivationStep(RuleId.ExValPair, structure, [child], ProofRule.RightEx, [witness])

    @staticmethod
    def _apply_OrInl(structure):
        child = EvidenceStructure(structure.context, structure.goal.left, structure.evidence.term)
        return DerivationStep(RuleId.OrInl, structure, [child], ProofRule.RightOrL)

    @staticmethod
    def _apply_OrInr(structure):
        child = EvidenceStructure(structure.context, structure.goal.right, structure.evidence.term)
        return DerivationStep(RuleId.OrInr, structure, [child], ProofRule.RightOrR)

    @staticmethod
    def _apply_ImpLam(structure):
        goal, evidence = structure.goal, structure.evidence
        name, context = structure.context.fresh_evidence_var()
        context = context.extend(HypDecl(name, goal.left))
        body = TermAnalyser.subst_term(evidence.body, evidence.var, Var(name))
        child = EvidenceStructure(context, goal.right, body)
        return DerivationStep(RuleId.ImpLam, structure, [child], ProofRule.RightImp, [name])

    @staticmethod
    def _apply_AllLam(structure):
        goal, evidence = structure.goal, structure.evidence
        name, context = structure.context.fresh_domain_var()
        context = context.extend(DomainDecl(name))
        body = TermAnalyser.subst_term(evidence.body, evidence.var, Var(name))
        child = EvidenceStructure(context, FormulaTools.instance(goal, name), body)
        return DerivationStep(RuleId.AllLam, structure, [child], ProofRule.RightAll, [name])

    ##################
    #
    # Principal variable
    #
    #########
    @staticmethod
    def _apply_VarAx(structure):
        return DerivationStep(RuleId.VarAx, structure, [], ProofRule.Axiom, [structure.evidence.name])

    @staticmethod
    def _apply_DecideR(structure):
        redex, hole = TermAnalyser.principal_redex(structure.evidence)
        name = redex.scrut.name
        declared = structure.context.type_of(name)
        x, context = structure.context.fresh_evidence_var()
        y, context = context.fresh_evidence_var()
        left = EvidenceStructure(context, structure.goal,
                                 hole.plug(TermAnalyser.subst_term(redex.left, redex.x, Var(x))))
        right = EvidenceStructure(context, structure.goal,
                                  hole.plug(TermAnalyser.subst_term(redex.right, redex.y, Var(y))))
        children = [ContextEditor.subst_in_structure(left, name, PInl(PVar(x, declared.left))),
                    ContextEditor.subst_in_structure(right, name, PInr(PVar(y, declared.right)))]
        return DerivationStep(RuleId.DecideR, structure, children, ProofRule.LeftOr, [name, x, y])

    @staticmethod
    def _apply_AndSpread(structure):
        redex, hole = TermAnalyser.principal_redex(structure.evidence)
        name = redex.scrut.name
        declared = structure.context.type_of(name)
        x, context = structure.context.fresh_evidence_var()
        y, context = context.fresh_evidence_var()
        body = TermAnalyser.subst_many(redex.body, {redex.x: Var(x), redex.y: Var(y)})
        child = EvidenceStructure(context, structure.goal, hole.plug(body))
        child = ContextEditor.subst_in_structure(child, name,
                                                 PPair(PVar(x, declared.left), PVar(y, declared.right)))
        return DerivationStep(RuleId.AndSpread, structure, [child], ProofRule.LeftAnd, [name, x, y])

    @staticmethod
    def _apply_ExSpread(structure):
        redex, hole = TermAnalyser.principal_redex(structure.evidence)
        name = redex.scrut.name
        declared = structure.context.type_of(name)
        witness, context = structure.context.fresh_domain_var()
        y, context = context.fresh_evidence_var()
        body = TermAnalyser.subst_many(redex.body, {redex.x: Var(witness), redex.y: Var(y)})
        child = EvidenceStructure(context, structure.goal, hole.plug(body))
        child = ContextEditor.subst_in_structure(
            child, name, PPair(PDomain(witness), PVar(y, FormulaTools.instance(declared, witness))))
        return DerivationStep(RuleId.ExSpread, structure, [child], ProofRule.LeftEx, [name, witness, y])

    @staticmethod
    def _apply_ApplyConst(structure):
        redex, hole = TermAnalyser.principal_redex(structure.evidence)
        body = structure.context.const_constraint(redex.fun.name)
        child = structure.with_evidence(hole.plug(body.to_term()))
        return DerivationStep(RuleId.ApplyConst, structure, [child])

    @staticmethod
    def _apply_ImpApply(structure):
        redex, hole = TermAnalyser.principal_redex(structure.evidence)
        name = redex.fun.name
        declared = structure.context.type_of(name)
        value, context = structure.context.fresh_evidence_var()
        argument = EvidenceStructure(context, declared.left, redex.arg)
        continuation = EvidenceStructure(
            context.extend(HypDecl(value, declared.right), ConstConstraint(name, PVar(value, declared.right))),
            structure.goal, hole.plug(Var(value)))
        return DerivationStep(RuleId.ImpApply, structure, [argument, continuation], ProofRule.LeftImp,
                              [name, value])

    @staticmethod
    def _apply_AllApply(structure):
        redex, hole = TermAnalyser.principal_redex(structure.evidence)
        child = structure.with_evidence(hole.plug(CbvAp(redex.fun, redex.arg)))
        return DerivationStep(RuleId.AllApply, structure, [child])

    @staticmethod
    def _apply_ApplyModel(structure):
        redex, hole = TermAnalyser.principal_redex(structure.evidence)
        body = structure.context.ap_constraint(redex.fun.name, redex.arg.name)
        child = structure.with_evidence(hole.plug(body.to_term()))
        return DerivationStep(RuleId.ApplyModel, structure, [child])

    @staticmethod
    def _apply_AllCbv(structure):
        redex, hole = TermAnalyser.principal_redex(structure.evidence)
        name, point = redex.fun.name, redex.arg.name
        instance = FormulaTools.instance(structure.context.type_of(name), point)
        value, context = structure.context.fresh_evidence_var()
        context = context.extend(HypDecl(value, instance), ApConstraint(name, point, PVar(value, instance)))
        child = EvidenceStructure(context, structure.goal, hole.plug(Var(value)))
        return DerivationStep(RuleId.AllCbv, structure, [child], ProofRule.LeftAll, [name, point, value])
