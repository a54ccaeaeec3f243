import logging

from e2p.core.FormulaTools import FormulaTools
from e2p.core.Models.Formula import FalseC, And, Or, Imp, All, Ex, Formula
from e2p.core.Models.ProofTree import ProofRule

logging.basicConfig()
logger = logging.getLogger("e2p")

MINIMAL = "minimal"
INTUITIONISTIC = "intuitionistic"
LOGICS = (MINIMAL, INTUITIONISTIC)


class ProofRejected(Exception):
    """
    A proof node does not apply to the sequent it has to prove.

    .. note:: path is the tuple of premise indexes leading from the root to the failing node
    """

    def __init__(self, path, reason):
        super(ProofRejected, self).__init__("at %s: %s" % (ProofChecker.format_path(path), reason))
        self.path = tuple(path)
        self.reason = reason


class Sequent(object):
    """
    Labelled hypotheses and declared domain variables proving a conclusion
    """

    def __init__(self, hypotheses=(), domain=frozenset(), conclusion=None):
        self.hypotheses = tuple(hypotheses)
        self.domain = frozenset(domain)
        self.conclusion = conclusion

    def lookup(self, label):
        for name, formula in self.hypotheses:
            if name == label:
                return formula
        return None

    def labels(self):
        return {name for name, _ in self.hypotheses} | self.domain

    def free_vars(self):
        free = FormulaTools.free_domain_vars(self.conclusion)
        for _, formula in self.hypotheses:
            free = free | FormulaTools.free_domain_vars(formula)
        return free

    def assume(self, label, formula):
        return Sequent(self.hypotheses + ((label, formula),), self.domain, self.conclusion)

    def declare(self, name):
        return Sequent(self.hypotheses, self.domain | {name}, self.conclusion)

    def prove(self, conclusion):
        return Sequent(self.hypotheses, self.domain, conclusion)

    def __str__(self):
        left = ["%s:D" % name for name in sorted(self.domain)] + \
               ["%s:%s" % (name, formula) for name, formula in self.hypotheses]
        return "%s |- %s" % (", ".join(left), self.conclusion)

    def __eq__(self, other):
        return self.__dict__ == other.__dict__


class ProofChecker(object):
    """
    Rebuild the sequents of a proof from its root goal and check every rule application.
    """

    @classmethod
    def check_proof(cls, goal, tree, logic=MINIMAL):
        """
        Accept the proof when every node applies to its sequent.

        :param goal: closed formula proved at the root
        :type goal: Formula
        :param tree: the proof
        :type tree: ProofTree
        :param logic: "minimal" or "intuitionistic"
        :return: True if the proof is accepted
        :rtype: Boolean

        :Example:

            ProofChecker.check_proof(Imp(a, a), proof(ProofRule.RightImp, "h0", premises=[proof(ProofRule.Axiom, "h0")]))

        .. raises:: ProofRejected
        """
        if logic not in LOGICS:
            raise ProofRejected((), "unknown logic %s" % logic)
        if not FormulaTools.is_closed(goal):
            raise ProofRejected((), "goal %s is not closed" % goal)
        if logic == MINIMAL and not FormulaTools.is_minimal(goal):
            raise ProofRejected((), "goal %s is not a minimal logic formula" % goal)
        stack = [(Sequent(conclusion=goal), tree, ())]
        while stack:
            sequent, node, path = stack.pop()
            premises = cls._check_node(sequent, node, path, logic)
            for index in reversed(range(len(premises))):
                stack.append((premises[index], node.premises[index], path + (index,)))
        logger.debug("[ProofChecker] accepted proof of %s (%s)" % (goal, logic))
        return True

    @classmethod
    def _check_node(cls, sequent, node, path, logic):
        """
        Check one node and return the sequents of its premises
        """
        rule = node.rule

        def reject(reason):
            raise ProofRejected(path, "%s on %s: %s" % (rule, sequent, reason))

        if len(node.premises) != rule.premises:
            reject("expects %d premises, got %d" % (rule.premises, len(node.premises)))
        if len(node.params) != len(rule.parameters):
            reject("expects %d parameters, got %d" % (len(rule.parameters), len(node.params)))
        for kind, param in zip(rule.parameters, node.params):
            if (kind == "f") != isinstance(param, Formula):
                reject("parameter %s has the wrong kind" % (param,))

        def hypothesis(label, shape):
            formula = sequent.lookup(label)
            if formula is None:
                reject("no hypothesis %s" % label)
            if not isinstance(formula, shape):
                reject("hypothesis %s:%s is not %s" % (label, formula, shape.__name__))
            return formula

        def fresh(*names):
            if len(set(names)) != len(names):
                reject("new names %s are not distinct" % (list(names),))
            for name in names:
                if name in sequent.labels():
                    reject("%s is already used" % name)

        def declared(name):
            if name not in sequent.domain:
                reject("domain variable %s is not declared" % name)

        conclusion = sequent.conclusion
        if rule is ProofRule.Axiom:
            formula = sequent.lookup(node.params[0])
            if formula is None:
                reject("no hypothesis %s" % node.params[0])
            if not FormulaTools.alpha_equal(formula, conclusion):
                reject("hypothesis %s:%s does not match" % (node.params[0], formula))
            return []
        if rule is ProofRule.FalseElim:
            if logic != INTUITIONISTIC:
                reject("FalseElim is not a minimal logic rule")
            hypothesis(node.params[0], FalseC)
            return []
        if rule is ProofRule.RightAnd:
            cls._expect(conclusion, And, reject)
            return [sequent.prove(conclusion.left), sequent.prove(conclusion.right)]
        if rule in (ProofRule.RightOrL, ProofRule.RightOrR):
            cls._expect(conclusion, Or, reject)
            return [sequent.prove(conclusion.left if rule is ProofRule.RightOrL else conclusion.right)]
        if rule is ProofRule.RightImp:
            cls._expect(conclusion, Imp, reject)
            fresh(node.params[0])
            return [sequent.assume(node.params[0], conclusion.left).prove(conclusion.right)]
        if rule is ProofRule.RightAll:
            cls._expect(conclusion, All, reject)
            eigenvariable = node.params[0]
            fresh(eigenvariable)
            if eigenvariable in sequent.free_vars():
                reject("eigenvariable %s occurs free in the sequent" % eigenvariable)
            return [sequent.declare(eigenvariable).prove(FormulaTools.instance(conclusion, eigenvariable))]
        if rule is ProofRule.RightEx:
            cls._expect(conclusion, Ex, reject)
            declared(node.params[0])
            return [sequent.prove(FormulaTools.instance(conclusion, node.params[0]))]
        if rule is ProofRule.LeftAnd:
            label, x, y = node.params
            formula = hypothesis(label, And)
            fresh(x, y)
            return [sequent.assume(x, formula.left).assume(y, formula.right)]
        if rule is ProofRule.LeftOr:
            label, x, y = node.params
            formula = hypothesis(label, Or)
            fresh(x)
            fresh(y)
            return [sequent.assume(x, formula.left), sequent.assume(y, formula.right)]
        if rule is ProofRule.LeftImp:
            label, value = node.params
            formula = hypothesis(label, Imp)
            fresh(value)
            return [sequent.prove(formula.left), sequent.assume(value, formula.right)]
        if rule is ProofRule.LeftAll:
            label, point, value = node.params
            formula = hypothesis(label, All)
            declared(point)
            fresh(value)
            return [sequent.assume(value, FormulaTools.instance(formula, point))]
        if rule is ProofRule.LeftEx:
            label, eigenvariable, value = node.params
            formula = hypothesis(label, Ex)
            fresh(eigenvariable, value)
            if eigenvariable in sequent.free_vars():
                reject("eigenvariable %s occurs free in the sequent" % eigenvariable)
            return [sequent.declare(eigenvariable).assume(value, FormulaTools.instance(formula, eigenvariable))]
        if rule is ProofRule.Cut:
            formula, label = node.params
            undeclared = FormulaTools.free_domain_vars(formula) - sequent.domain
            if undeclared:
                reject("cut formula uses undeclared %s" % sorted(undeclared))
            if logic == MINIMAL and not FormulaTools.is_minimal(formula):
                reject("cut formula %s is not a minimal logic formula" % formula)
            fresh(label)
            return [sequent.prove(formula), sequent.assume(label, formula)]
        reject("unknown rule")

    @staticmethod
    def _expect(conclusion, shape, reject):
        if not isinstance(conclusion, shape):
            reject("conclusion is not %s" % shape.__name__)

    @staticmethod
    def format_path(path):
        if not path:
            return "root"
        return "root." + ".".join(str(index) for index in path)
