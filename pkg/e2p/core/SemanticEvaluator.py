import itertools
import logging
import random
from enum import Enum

from e2p.core.ContextChecker import ContextChecker
from e2p.core.Evaluator import Evaluator, FuelGauge, FuelExhaustedError
from e2p.core.FormulaTools import FormulaTools
from e2p.core.Models.EvalOutcome import NO_REDEX
from e2p.core.Models.EvidenceContext import ConstConstraint, ApConstraint
from e2p.core.Models.EvidenceTerm import Pair, Inl, Inr, Lam, Ap, Const, Stuck, SemanticFunction, VALUES
from e2p.core.Models.FinitaryStructure import FinitaryStructure
from e2p.core.Models.Formula import Atom, FalseC, And, Or, Imp, All, Ex
from e2p.core.Models.Pattern import PVar, PDomain, PPair, PInl, PInr
from e2p.core.Models.SemValue import AtomToken, VStar, VDomain, VPair, VInl, VInr, VTable
from e2p.core.TermAnalyser import TermAnalyser
from e2p.core.Utils.Utils import Utils

logging.basicConfig()
logger = logging.getLogger("e2p")


class UnboundVariable(Exception):
    """
    A free domain variable of the formula has no value in the structure
    """
    pass


class DomainTooSmall(Exception):
    """
    The domain cannot map the domain variables injectively
    """
    pass


class ModelConstructionError(Exception):
    """
    The model built for a context does not satisfy it
    """
    pass


class Membership(Enum):
    MEMBER = "member"
    NOT_MEMBER = "notMember"
    INCONCLUSIVE = "inconclusive"

    def __str__(self):
        return self.value


class SampleOutcome(Enum):
    ALL_MEMBER = "allMember"
    COUNTEREXAMPLE = "counterexample"
    INCONCLUSIVE = "inconclusive"

    def __str__(self):
        return self.value


class SampleResult(object):
    """
    Result of checking evidence over a sample of finitary structures.

    .. note:: structure is the first refuting structure when outcome is COUNTEREXAMPLE
    """

    def __init__(self, outcome, structure=None, checked=0):
        self.outcome = outcome
        self.structure = structure
        self.checked = checked

    def serialize(self):
        return {
            'outcome': str(self.outcome),
            'structure': str(self.structure) if self.structure is not None else None,
            'checked': self.checked
        }

    def __str__(self):
        return str(self.serialize())

    def __eq__(self, other):
        return self.__dict__ == other.__dict__


def _domain_env(environment):
    return {name: value for name, value in environment.items() if isinstance(value, VDomain)}


def _atom_indexes(formula, env):
    indexes = list()
    for arg in formula.args:
        value = env.get(arg)
        if not isinstance(value, VDomain):
            raise UnboundVariable("domain variable %s of %s has no value" % (arg, formula))
        indexes.append(value.index)
    return tuple(indexes)


class FunctionValue(SemanticFunction):
    """
    A table placed in a term. Applying it coerces the argument into the domain type, then looks it up.
    Arguments outside the domain type and missing keys give a stuck term.
    """

    def __init__(self, table, formula, env, reifier):
        self.table = table
        self.formula = formula
        self.env = tuple(sorted(env.items()))
        self.reifier = reifier

    def apply_to(self, argument):
        env = dict(self.env)
        if isinstance(self.formula, Imp):
            key = self.reifier.reify(argument, self.formula.left, env)
            result = self.table.lookup(key) if key is not None else None
            if result is None:
                return Stuck()
            return self.reifier.render(result, self.formula.right, env)
        index = self.reifier.domain_element(argument)
        result = self.table.lookup(VDomain(index)) if index is not None else None
        if result is None:
            return Stuck()
        env[self.formula.var] = VDomain(index)
        return self.reifier.render(result, self.formula.body, env)

    def __eq__(self, other):
        return isinstance(other, FunctionValue) \
            and (self.table, self.formula, self.env) == (other.table, other.formula, other.env)

    def __hash__(self):
        return hash((self.table, self.formula, self.env))

    def __str__(self):
        return "fn%s" % self.table


class Reifier(object):
    """
    Coerce evidence terms into the finitary types of one structure, under a shared fuel gauge
    """

    def __init__(self, structure, gauge):
        self.structure = structure
        self.gauge = gauge

    def compute(self, term):
        while not isinstance(term, VALUES):
            reduct = Evaluator.step(term)
            if reduct is NO_REDEX:
                return term
            self.gauge.consume()
            term = reduct
        return term

    def domain_element(self, term):
        head = self.compute(term)
        if isinstance(head, Const) and isinstance(head.value, VDomain) \
                and 0 <= head.value.index < self.structure.domain_size:
            return head.value.index
        return None

    def reify(self, term, formula, env):
        """
        The member of M(formula) that <term> stands for, None when it is not a member

        .. raises:: FuelExhaustedError
        """
        head = self.compute(term)
        if isinstance(formula, Atom):
            values = self.structure.atom_values(formula.name, _atom_indexes(formula, env))
            if isinstance(head, Const) and head.value in values:
                return head.value
            return None
        if isinstance(formula, FalseC):
            return None
        if isinstance(formula, And):
            if not isinstance(head, Pair):
                return None
            left = self.reify(head.left, formula.left, env)
            if left is None:
                return None
            right = self.reify(head.right, formula.right, env)
            return VPair(left, right) if right is not None else None
        if isinstance(formula, Or):
            if isinstance(head, Inl):
                value = self.reify(head.term, formula.left, env)
                return VInl(value) if value is not None else None
            if isinstance(head, Inr):
                value = self.reify(head.term, formula.right, env)
                return VInr(value) if value is not None else None
            return None
        if isinstance(formula, Ex):
            if not isinstance(head, Pair):
                return None
            index = self.domain_element(head.left)
            if index is None:
                return None
            value = self.reify(head.right, formula.body, dict(env, **{formula.var: VDomain(index)}))
            return VPair(VDomain(index), value) if value is not None else None
        # function types
        if not (isinstance(head, Lam) or (isinstance(head, Const) and isinstance(head.value, SemanticFunction))):
            return None
        graph = list()
        if isinstance(formula, Imp):
            for argument in SemanticEvaluator.iter_formula(self.structure, formula.left, env):
                result = self.reify(Ap(head, self.render(argument, formula.left, env)), formula.right, env)
                if result is None:
                    return None
                graph.append((argument, result))
        else:
            for element in self.structure.domain():
                result = self.reify(Ap(head, Const(element)), formula.body, dict(env, **{formula.var: element}))
                if result is None:
                    return None
                graph.append((element, result))
        return VTable(tuple(graph))

    def render(self, value, formula, env):
        """
        A term standing for the member <value> of M(formula)
        """
        if isinstance(value, (AtomToken, VStar, VDomain)):
            return Const(value)
        if isinstance(value, VPair):
            if isinstance(formula, Ex):
                return Pair(Const(value.left),
                            self.render(value.right, formula.body, dict(env, **{formula.var: value.left})))
            return Pair(self.render(value.left, formula.left, env), self.render(value.right, formula.right, env))
        if isinstance(value, VInl):
            return Inl(self.render(value.value, formula.left, env))
        if isinstance(value, VInr):
            return Inr(self.render(value.value, formula.right, env))
        if isinstance(value, VTable):
            return Const(FunctionValue(value, formula, env, self))
        raise TypeError("not a semantic value: %r" % (value,))


class SemanticEvaluator(object):
    """
    Finitary structures as a semantic oracle: formulas are evaluated into finite sets of canonical values
    and evidence is checked for membership in them.
    """

    ##################
    #
    # Formulas
    #
    #########
    @classmethod
    def iter_formula(cls, structure, formula, env=None):
        """
        Enumerate M(formula) lazily: tokens ascending, pairs lexicographic, inl before inr,
        tables by pointwise order.

        :param structure: the structure
        :type structure: FinitaryStructure
        :param formula: the formula, its free domain variables valued in env or in the structure environment
        :param env: domain variable values
        :type env: dict
        :return: generator of SemValue
        """
        if env is None:
            env = _domain_env(structure.environment)
        if isinstance(formula, Atom):
            yield from structure.atom_values(formula.name, _atom_indexes(formula, env))
        elif isinstance(formula, FalseC):
            return
        elif isinstance(formula, And):
            if not cls.is_inhabited(structure, formula.right, env):
                return
            rights = list(cls.iter_formula(structure, formula.right, env))
            for left in cls.iter_formula(structure, formula.left, env):
                for right in rights:
                    yield VPair(left, right)
        elif isinstance(formula, Or):
            for value in cls.iter_formula(structure, formula.left, env):
                yield VInl(value)
            for value in cls.iter_formula(structure, formula.right, env):
                yield VInr(value)
        elif isinstance(formula, Imp):
            # no function into an empty type, unless its domain is empty too
            if not cls.is_inhabited(structure, formula, env):
                return
            keys = list(cls.iter_formula(structure, formula.left, env))
            results = list(cls.iter_formula(structure, formula.right, env))
            for choice in itertools.product(results, repeat=len(keys)):
                yield VTable(tuple(zip(keys, choice)))
        elif isinstance(formula, All):
            if not cls.is_inhabited(structure, formula, env):
                return
            keys = structure.domain()
            columns = [list(cls.iter_formula(structure, formula.body, dict(env, **{formula.var: key})))
                       for key in keys]
            for choice in itertools.product(*columns):
                yield VTable(tuple(zip(keys, choice)))
        elif isinstance(formula, Ex):
            for element in structure.domain():
                for value in cls.iter_formula(structure, formula.body, dict(env, **{formula.var: element})):
                    yield VPair(element, value)

    @classmethod
    def eval_formula(cls, structure, formula, env=None):
        """
        Every member of M(formula), in enumeration order

        :rtype: list
        """
        return list(cls.iter_formula(structure, formula, env))

    @classmethod
    def first_inhabitant(cls, structure, formula, env=None):
        if not cls.is_inhabited(structure, formula, env):
            return None
        return next(cls.iter_formula(structure, formula, env), None)

    @classmethod
    def is_inhabited(cls, structure, formula, env=None):
        """
        True when M(formula) is not empty, decided without building any value
        """
        if env is None:
            env = _domain_env(structure.environment)
        if isinstance(formula, Atom):
            return len(structure.atom_values(formula.name, _atom_indexes(formula, env))) > 0
        if isinstance(formula, FalseC):
            return False
        if isinstance(formula, And):
            return cls.is_inhabited(structure, formula.left, env) and cls.is_inhabited(structure, formula.right, env)
        if isinstance(formula, Or):
            return cls.is_inhabited(structure, formula.left, env) or cls.is_inhabited(structure, formula.right, env)
        if isinstance(formula, Imp):
            return not cls.is_inhabited(structure, formula.left, env) \
                or cls.is_inhabited(structure, formula.right, env)
        checks = (cls.is_inhabited(structure, formula.body, dict(env, **{formula.var: element}))
                  for element in structure.domain())
        if isinstance(formula, All):
            return all(checks)
        return any(checks)

    @classmethod
    def cardinality(cls, structure, formula, env=None):
        """
        Size of M(formula), computed without enumerating

        :Example:

            SemanticEvaluator.cardinality(m, Imp(a, b))  # |M(b)| ** |M(a)|
        """
        if env is None:
            env = _domain_env(structure.environment)
        if isinstance(formula, Atom):
            return len(structure.atom_values(formula.name, _atom_indexes(formula, env)))
        if isinstance(formula, FalseC):
            return 0
        if isinstance(formula, And):
            return cls.cardinality(structure, formula.left, env) * cls.cardinality(structure, formula.right, env)
        if isinstance(formula, Or):
            return cls.cardinality(structure, formula.left, env) + cls.cardinality(structure, formula.right, env)
        if isinstance(formula, Imp):
            return cls.cardinality(structure, formula.right, env) ** cls.cardinality(structure, formula.left, env)
        sizes = [cls.cardinality(structure, formula.body, dict(env, **{formula.var: element}))
                 for element in structure.domain()]
        if isinstance(formula, All):
            result = 1
            for size in sizes:
                result *= size
            return result
        return sum(sizes)

    @classmethod
    def value_in_type(cls, structure, value, formula, env=None):
        """
        True when the semantic value <value> is a member of M(formula)
        """
        if env is None:
            env = _domain_env(structure.environment)
        if isinstance(formula, Atom):
            return value in structure.atom_values(formula.name, _atom_indexes(formula, env))
        if isinstance(formula, FalseC):
            return False
        if isinstance(formula, And):
            return isinstance(value, VPair) and cls.value_in_type(structure, value.left, formula.left, env) \
                and cls.value_in_type(structure, value.right, formula.right, env)
        if isinstance(formula, Or):
            if isinstance(value, VInl):
                return cls.value_in_type(structure, value.value, formula.left, env)
            if isinstance(value, VInr):
                return cls.value_in_type(structure, value.value, formula.right, env)
            return False
        if isinstance(formula, Ex):
            return isinstance(value, VPair) and isinstance(value.left, VDomain) \
                and 0 <= value.left.index < structure.domain_size \
                and cls.value_in_type(structure, value.right, formula.body, dict(env, **{formula.var: value.left}))
        if not isinstance(value, VTable) or len(set(value.keys())) != len(value.graph):
            return False
        if isinstance(formula, Imp):
            keys = cls.eval_formula(structure, formula.left, env)
            return len(keys) == len(value.graph) and all(value.lookup(key) is not None for key in keys) \
                and all(cls.value_in_type(structure, result, formula.right, env) for _, result in value.graph)
        keys = structure.domain()
        return len(keys) == len(value.graph) and all(
            value.lookup(key) is not None
            and cls.value_in_type(structure, value.lookup(key), formula.body, dict(env, **{formula.var: key}))
            for key in keys)

    ##################
    #
    # Evidence
    #
    #########
    @classmethod
    def check_membership(cls, structure, term, formula, fuel):
        """
        Check that <term> is consistent with M(formula).

        :param structure: the structure, its environment values every free variable of term and formula
        :type structure: FinitaryStructure
        :param term: the evidence
        :type term: EvidenceTerm
        :param formula: the formula
        :type formula: Formula
        :param fuel: the step budget shared by every evaluation of the check
        :return: MEMBER, NOT_MEMBER, or INCONCLUSIVE when the fuel runs out
        :rtype: Membership
        """
        reifier = Reifier(structure, FuelGauge(fuel))
        env = _domain_env(structure.environment)
        mapping = dict()
        for name in TermAnalyser.free_vars(term):
            value = structure.environment.get(name)
            if value is None:
                logger.debug("[SemanticEvaluator] free variable %s has no value" % name)
                return Membership.NOT_MEMBER
            if isinstance(value, VDomain):
                mapping[name] = Const(value)
            else:
                mapping[name] = reifier.render(value, structure.typing[name], env)
        try:
            value = reifier.reify(TermAnalyser.subst_many(term, mapping), formula, env)
        except FuelExhaustedError:
            logger.debug("[SemanticEvaluator] membership inconclusive after %d steps" % fuel)
            return Membership.INCONCLUSIVE
        return Membership.MEMBER if value is not None else Membership.NOT_MEMBER

    ##################
    #
    # Models
    #
    #########
    @staticmethod
    def m_triv(domain_vars, domain_size):
        """
        The structure interpreting every atom as Unit, with <domain_vars> mapped injectively

        .. raises:: DomainTooSmall
        """
        if domain_size < max(len(domain_vars), 1):
            raise DomainTooSmall("%d domain variables do not fit in a domain of size %d"
                                 % (len(domain_vars), domain_size))
        environment = {name: VDomain(index) for index, name in enumerate(domain_vars)}
        return FinitaryStructure(domain_size=domain_size, environment=environment)

    @staticmethod
    def pattern_value(pattern, environment):
        if isinstance(pattern, (PVar, PDomain)):
            return environment[pattern.name]
        if isinstance(pattern, PPair):
            return VPair(SemanticEvaluator.pattern_value(pattern.left, environment),
                         SemanticEvaluator.pattern_value(pattern.right, environment))
        if isinstance(pattern, PInl):
            return VInl(SemanticEvaluator.pattern_value(pattern.pattern, environment))
        if isinstance(pattern, PInr):
            return VInr(SemanticEvaluator.pattern_value(pattern.pattern, environment))
        raise TypeError("not a pattern: %r" % (pattern,))

    @classmethod
    def build_context_model(cls, context, domain_size=None):
        """
        Extend M_triv with values for the evidence variables of the context, highest index first,
        so that every constraint holds.

        :param context: a well formed evidence context
        :type context: EvidenceContext
        :param domain_size: size of the domain, the number of domain variables (at least 1) by default
        :return: the model
        :rtype: FinitaryStructure

        .. raises:: ContextViolation, DomainTooSmall, ModelConstructionError
        """
        ContextChecker.check_wellformed(context)
        domain_vars = context.domain_vars()
        if domain_size is None:
            domain_size = max(len(domain_vars), 1)
        model = cls.m_triv(domain_vars, domain_size)

        hypotheses = context.hypotheses()
        if all(Utils.name_index(entry.name, "v") is not None for entry in hypotheses):
            hypotheses.sort(key=lambda entry: Utils.name_index(entry.name, "v"), reverse=True)
        else:
            hypotheses.reverse()
        for entry in hypotheses:
            value = cls._choose_value(model, context, entry)
            if value is None:
                raise ModelConstructionError("%s has no value in %s" % (entry, model))
            model = model.bind(entry.name, value, entry.type)

        for entry in context.hypotheses():
            if not cls.value_in_type(model, model.environment[entry.name], entry.type):
                raise ModelConstructionError("value of %s is not in its type" % entry)
        if not cls.satisfies_constraints(model, context):
            raise ModelConstructionError("model %s breaks a constraint of %s" % (model, context))
        logger.debug("[SemanticEvaluator] model of %s: %s" % (context, model.serialize()))
        return model

    @classmethod
    def _choose_value(cls, model, context, entry):
        env = _domain_env(model.environment)
        formula = entry.type
        if isinstance(formula, Imp):
            body = context.const_constraint(entry.name)
            if body is not None:
                result = cls.pattern_value(body, model.environment)
                keys = cls.eval_formula(model, formula.left, env)
                return VTable(tuple((key, result) for key in keys))
        if isinstance(formula, All):
            constrained = {model.environment[constraint.domain]: constraint.body
                           for constraint in context.constraints()
                           if isinstance(constraint, ApConstraint) and constraint.fun == entry.name}
            if constrained:
                graph = list()
                for element in model.domain():
                    if element in constrained:
                        result = cls.pattern_value(constrained[element], model.environment)
                    else:
                        result = cls.first_inhabitant(model, formula.body, dict(env, **{formula.var: element}))
                        if result is None:
                            return None
                    graph.append((element, result))
                return VTable(tuple(graph))
        return cls.first_inhabitant(model, formula, env)

    @classmethod
    def satisfies_constraints(cls, model, context):
        """
        True when every constraint of the context holds for the values of the model
        """
        for constraint in context.constraints():
            expected = cls.pattern_value(constraint.body, model.environment)
            if isinstance(constraint, ConstConstraint):
                table = model.environment[constraint.name]
                if any(result != expected for _, result in table.graph):
                    return False
            else:
                table = model.environment[constraint.fun]
                if table.lookup(model.environment[constraint.domain]) != expected:
                    return False
        return True

    @classmethod
    def check_structure_sample(cls, structure, domain_size=None, fuel=100000):
        """
        Build a model of the context of an evidence structure and check its evidence against its goal there

        :param structure: the evidence structure
        :type structure: EvidenceStructure
        :rtype: Membership
        """
        model = cls.build_context_model(structure.context, domain_size)
        return cls.check_membership(model, structure.evidence, structure.goal, fuel)

    ##################
    #
    # Uniform validity
    #
    #########
    @classmethod
    def enumerate_structures(cls, formula, kmax, atomcard):
        """
        Every structure for the relations of <formula> with a domain of size 1 to kmax and every atom
        instance of cardinality 0 to atomcard, in a fixed order.

        :return: generator of FinitaryStructure
        """
        language = FormulaTools.language_of(formula)
        for domain_size in range(1, kmax + 1):
            instances = [(name, indexes)
                         for name, arity in sorted(language.relations.items())
                         for indexes in itertools.product(range(domain_size), repeat=arity)]
            for cards in itertools.product(range(atomcard + 1), repeat=len(instances)):
                yield FinitaryStructure(domain_size=domain_size, atom_interp=dict(zip(instances, cards)))

    @classmethod
    def random_structures(cls, formula, kmax, atomcard, count, seed=0):
        """
        <count> structures drawn with random.Random(seed), domain sizes and cardinalities in the ranges of
        enumerate_structures
        """
        language = FormulaTools.language_of(formula)
        generator = random.Random(seed)
        for _ in range(count):
            domain_size = generator.randint(1, kmax)
            atom_interp = dict()
            for name, arity in sorted(language.relations.items()):
                for indexes in itertools.product(range(domain_size), repeat=arity):
                    atom_interp[(name, indexes)] = generator.randint(0, atomcard)
            yield FinitaryStructure(domain_size=domain_size, atom_interp=atom_interp)

    @classmethod
    def check_uniform_validity_sample(cls, formula, term, kmax, atomcard, fuel, structures=None):
        """
        Check <term> against <formula> in every enumerated structure.

        :param formula: closed minimal formula
        :param term: closed evidence
        :param kmax: largest domain size
        :param atomcard: largest cardinality of an atom instance
        :param fuel: step budget of each membership check
        :param structures: the structures to check instead of the enumeration
        :return: the first counterexample, ALL_MEMBER, or INCONCLUSIVE when a check ran out of fuel
        :rtype: SampleResult
        """
        if structures is None:
            structures = cls.enumerate_structures(formula, kmax, atomcard)
        checked = 0
        inconclusive = False
        for structure in structures:
            checked += 1
            membership = cls.check_membership(structure, term, formula, fuel)
            if membership is Membership.NOT_MEMBER:
                logger.debug("[SemanticEvaluator] counterexample: %s" % structure)
                return SampleResult(SampleOutcome.COUNTEREXAMPLE, structure, checked)
            if membership is Membership.INCONCLUSIVE:
                inconclusive = True
        if inconclusive:
            return SampleResult(SampleOutcome.INCONCLUSIVE, checked=checked)
        return SampleResult(SampleOutcome.ALL_MEMBER, checked=checked)
