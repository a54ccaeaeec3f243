import logging

from e2p.core.FormulaTools import FormulaTools
from e2p.core.Models.EvidenceContext import DomainDecl, HypDecl, ConstConstraint, ApConstraint
from e2p.core.Models.Formula import And, Or, Imp, All, Ex
from e2p.core.Models.Pattern import PVar, PDomain, PPair, PInl, PInr
from e2p.core.Utils.Utils import Utils

logging.basicConfig()
logger = logging.getLogger("e2p")


class ContextViolation(Exception):
    """
    An evidence context is not well formed.

    .. note:: position is the index of the first violating entry
    """

    def __init__(self, message, entry=None, position=None):
        super(ContextViolation, self).__init__(message)
        self.entry = entry
        self.position = position


class UndeclaredVariable(ContextViolation):
    """
    A variable is used before its declaration
    """
    pass


class DuplicateDeclaration(ContextViolation):
    """
    A variable is declared twice
    """
    pass


class DuplicateConstraint(ContextViolation):
    """
    Two constraints on the same function (or the same function and point)
    """
    pass


class StratificationBreach(ContextViolation):
    """
    A constraint on v_i mentions v_j with j <= i
    """
    pass


class PatternTypeMismatch(ContextViolation):
    """
    A constraint's pattern does not have the type required by its function
    """
    pass


class ContextChecker(object):
    """
    This Class provides the checks that an evidence context is well formed.
    """

    @classmethod
    def check_wellformed(cls, context):
        """
        Return True if the context declares before use, types its constraint patterns correctly,
        and keeps its constraints unique and stratified.

        :param context: the context to check
        :type context: EvidenceContext
        :return: True if the context is well formed
        :rtype: Boolean

        :Example:

            ContextChecker.check_wellformed(EvidenceContext([DomainDecl("d0"), HypDecl("v0", Atom("P", ("d0",)))]))

        .. raises:: UndeclaredVariable, DuplicateDeclaration, DuplicateConstraint, StratificationBreach,
                    PatternTypeMismatch
        .. warnings:: Class Method and Public
        """
        domain = set()
        hypotheses = dict()
        positions = dict()
        constrained = set()
        for position, entry in enumerate(context.entries):
            if isinstance(entry, (DomainDecl, HypDecl)):
                if entry.name in domain or entry.name in hypotheses:
                    raise DuplicateDeclaration("%s is declared twice" % entry.name, entry, position)
                positions[entry.name] = position
                if isinstance(entry, DomainDecl):
                    domain.add(entry.name)
                    continue
                undeclared = FormulaTools.free_domain_vars(entry.type) - domain
                if undeclared:
                    raise UndeclaredVariable("type of %s uses undeclared %s" % (entry.name, sorted(undeclared)),
                                             entry, position)
                hypotheses[entry.name] = entry.type
            elif isinstance(entry, ConstConstraint):
                function_type = cls._function_type(entry, entry.name, hypotheses, position)
                if not isinstance(function_type, Imp):
                    raise PatternTypeMismatch("%s is not an implication" % entry.name, entry, position)
                key = (entry.name,)
                if key in constrained:
                    raise DuplicateConstraint("%s already has a constraint" % entry.name, entry, position)
                constrained.add(key)
                cls._check_pattern(entry.body, function_type.right, domain, hypotheses, entry, position)
                cls._check_stratified(entry.name, entry.body, positions, entry, position)
            elif isinstance(entry, ApConstraint):
                function_type = cls._function_type(entry, entry.fun, hypotheses, position)
                if not isinstance(function_type, All):
                    raise PatternTypeMismatch("%s is not universally quantified" % entry.fun, entry, position)
                if entry.domain not in domain:
                    raise UndeclaredVariable("%s is not a declared domain variable" % entry.domain, entry, position)
                key = (entry.fun, entry.domain)
                if key in constrained:
                    raise DuplicateConstraint("cbv(%s; %s) already has a constraint" % key, entry, position)
                constrained.add(key)
                cls._check_pattern(entry.body, FormulaTools.instance(function_type, entry.domain),
                                   domain, hypotheses, entry, position)
                cls._check_stratified(entry.fun, entry.body, positions, entry, position)
        logger.debug("[ContextChecker] context well formed: %s" % context)
        return True

    @staticmethod
    def _function_type(entry, name, hypotheses, position):
        if name not in hypotheses:
            raise UndeclaredVariable("constraint on undeclared %s" % name, entry, position)
        return hypotheses[name]

    @classmethod
    def _check_pattern(cls, pattern, formula, domain, hypotheses, entry, position):
        if isinstance(pattern, PVar):
            if pattern.name not in hypotheses:
                raise UndeclaredVariable("pattern variable %s is not declared" % pattern.name, entry, position)
            declared = hypotheses[pattern.name]
            if not FormulaTools.alpha_equal(declared, formula) \
                    or (pattern.type is not None and not FormulaTools.alpha_equal(pattern.type, formula)):
                raise PatternTypeMismatch("%s:%s used at type %s" % (pattern.name, declared, formula),
                                          entry, position)
            return
        if isinstance(pattern, PPair) and isinstance(formula, And):
            cls._check_pattern(pattern.left, formula.left, domain, hypotheses, entry, position)
            cls._check_pattern(pattern.right, formula.right, domain, hypotheses, entry, position)
            return
        if isinstance(pattern, PPair) and isinstance(formula, Ex) and isinstance(pattern.left, PDomain):
            if pattern.left.name not in domain:
                raise UndeclaredVariable("witness %s is not declared" % pattern.left.name, entry, position)
            cls._check_pattern(pattern.right, FormulaTools.instance(formula, pattern.left.name),
                               domain, hypotheses, entry, position)
            return
        if isinstance(pattern, PInl) and isinstance(formula, Or):
            cls._check_pattern(pattern.pattern, formula.left, domain, hypotheses, entry, position)
            return
        if isinstance(pattern, PInr) and isinstance(formula, Or):
            cls._check_pattern(pattern.pattern, formula.right, domain, hypotheses, entry, position)
            return
        raise PatternTypeMismatch("pattern %s cannot have type %s" % (pattern, formula), entry, position)

    @staticmethod
    def _check_stratified(name, pattern, positions, entry, position):
        own_index = Utils.name_index(name, "v")
        for leaf in pattern.leaves():
            if not isinstance(leaf, PVar):
                continue
            leaf_index = Utils.name_index(leaf.name, "v")
            if own_index is not None and leaf_index is not None:
                ordered = own_index < leaf_index
            else:
                ordered = positions[name] < positions[leaf.name]
            if not ordered:
                raise StratificationBreach("constraint on %s mentions %s" % (name, leaf.name), entry, position)
