import logging

from e2p.core.ContextChecker import ContextChecker, ContextViolation
from e2p.core.Evaluator import Evaluator, FuelGauge
from e2p.core.FormulaTools import FormulaTools, NotClosedFormula, NotMinimalFormula
from e2p.core.Models.EvalOutcome import NO_REDEX
from e2p.core.Models.EvidenceContext import EvidenceContext, EvidenceStructure
from e2p.core.Models.EvidenceTerm import Var, Ap, CbvAp, VALUES
from e2p.core.Models.ProofTree import ProofTree
from e2p.core.RuleLauncher import RuleLauncher
from e2p.core.RuleMatcher import RuleMatcher
from e2p.core.TermAnalyser import TermAnalyser
from e2p.core.Utils.Utils import Utils

logging.basicConfig()
logger = logging.getLogger("e2p")

DEFAULT_FUEL = 100000


class InvariantViolation(Exception):
    """
    A derivation step broke the measure decrease or produced an ill formed context
    """
    pass


class NotClosedEvidence(Exception):
    """
    The evidence has free variables
    """
    pass


class ProofSynthesizer(object):
    """
    Build a minimal logic proof of a goal from evidence for it.

    The synthesizer alternates computing the evidence to head shape with matching the structure against
    the sixteen rules, recursing on the derived structures. Computation steps and rule applications draw
    from the same fuel gauge.

    :Example:

        synthesizer = ProofSynthesizer(fuel=1000)
        proof = synthesizer.prove(Imp(Atom("A"), Atom("A")), Lam("x", Var("x")))
    """

    def __init__(self, fuel=DEFAULT_FUEL, pre_normalize=False, check_invariants=False, listener=None):
        """
        :param fuel: maximum number of computation steps and rule applications
        :param pre_normalize: fully normalize the evidence and every derived evidence, and measure them
        :param check_invariants: raise InvariantViolation on a broken invariant instead of recording it
        :param listener: called with (step number, DerivationStep) after every rule application
        """
        self.gauge = FuelGauge(fuel)
        self.pre_normalize = pre_normalize
        self.check_invariants = check_invariants
        self.listener = listener
        self.steps = list()
        self.measures = list()
        self.violations = list()

    def prove(self, goal, evidence):
        """
        Run the procedure from the structure ( |= goal, evidence)

        :param goal: closed minimal formula
        :type goal: Formula
        :param evidence: closed evidence term
        :type evidence: EvidenceTerm
        :return: the proof of the goal
        :rtype: ProofTree

        .. raises:: NotMinimalFormula, NotClosedFormula, NotClosedEvidence, NoRuleMatches, StuckEvidence,
                    FuelExhaustedError, InvariantViolation
        """
        if not FormulaTools.is_minimal(goal):
            raise NotMinimalFormula("%s is not a minimal logic formula" % goal)
        if not FormulaTools.is_closed(goal):
            raise NotClosedFormula("%s has free variables %s" % (goal, sorted(FormulaTools.free_domain_vars(goal))))
        free = TermAnalyser.free_vars(evidence)
        if free:
            raise NotClosedEvidence("evidence has free variables %s" % sorted(free))

        names = TermAnalyser.all_names(evidence) | FormulaTools.all_names(goal)
        context = EvidenceContext(next_evidence_index=Utils.next_index(names, "v"),
                                  next_domain_index=Utils.next_index(names, "d"))
        if self.pre_normalize:
            evidence = Evaluator.normalize_with(evidence, self.gauge)
        logger.debug("[ProofSynthesizer] prove %s with fuel %d" % (goal, self.gauge.fuel))
        return self._prove(EvidenceStructure(context, goal, evidence))

    def _prove(self, structure):
        while True:
            structure = self._compute(structure)
            rule = RuleMatcher.match_rule(structure)
            self.gauge.consume()
            step = RuleLauncher.apply_rule(structure, rule)
            if self.pre_normalize:
                step.children = tuple(self._normalize_child(structure, child) for child in step.children)
            self._record(step)
            if step.proof_rule is None:
                structure = step.children[0]
                continue
            premises = tuple(self._prove(child) for child in step.children)
            return ProofTree(step.proof_rule, step.params, premises)

    def _compute(self, structure):
        """
        Reduce the evidence until it is canonical or blocked by a variable.
        cbv(e; d) with d a declared domain variable and e not a variable is reduced to e(d).
        """
        term = structure.evidence
        while not isinstance(term, VALUES):
            reduct = Evaluator.step(term)
            if reduct is NO_REDEX:
                reduct = self._apply_domain_value(term, structure.context)
                if reduct is None:
                    break
            self.gauge.consume()
            term = reduct
        return structure.with_evidence(term)

    @staticmethod
    def _apply_domain_value(term, context):
        redex, hole = TermAnalyser.principal_redex(term)
        if isinstance(redex, CbvAp) and isinstance(redex.arg, Var) and not isinstance(redex.fun, Var) \
                and context.declares_domain(redex.arg.name):
            return hole.plug(Ap(redex.fun, redex.arg))
        return None

    def _normalize_child(self, parent, child):
        child = child.with_evidence(Evaluator.normalize_with(child.evidence, self.gauge))
        before = TermAnalyser.measure(parent.evidence)
        after = TermAnalyser.measure(child.evidence)
        self.measures.append((before, after))
        if not after < before:
            self._violation("measure %s does not decrease to %s" % (before, after))
        return child

    def _record(self, step):
        self.steps.append(step)
        if self.check_invariants:
            for child in step.children:
                try:
                    ContextChecker.check_wellformed(child.context)
                except ContextViolation as e:
                    self._violation("%s produced an ill formed context: %s" % (step.rule, e))
        logger.debug("[ProofSynthesizer] step %d: %s on %s" % (len(self.steps), step.rule, step.parent.goal))
        if self.listener is not None:
            self.listener(len(self.steps), step)

    def _violation(self, message):
        self.violations.append(message)
        logger.debug("[ProofSynthesizer] invariant violation: %s" % message)
        if self.check_invariants:
            raise InvariantViolation(message)


def prf_driver(goal, evidence, fuel=DEFAULT_FUEL, pre_normalize=False, check_invariants=False, listener=None):
    """
    Prove <goal> from <evidence> with a fresh ProofSynthesizer
    """
    synthesizer = ProofSynthesizer(fuel=fuel, pre_normalize=pre_normalize, check_invariants=check_invariants,
                                   listener=listener)
    return synthesizer.prove(goal, evidence)
