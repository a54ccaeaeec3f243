import logging

from e2p.core.Models.EvalOutcome import NO_REDEX, CanonicalForm, PrincipalVariable, StuckTerm, FuelExhausted
from e2p.core.Models.EvidenceTerm import Var, Pair, Inl, Inr, Lam, Ap, Spread, Decide, CbvAp, CbvPair, Stuck, \
    Const, SemanticFunction, VALUES
from e2p.core.TermAnalyser import TermAnalyser

logging.basicConfig()
logger = logging.getLogger("e2p")


class FuelExhaustedError(Exception):
    """
    The step budget ran out before the computation finished
    """

    def __init__(self, message, steps_used=0):
        super(FuelExhaustedError, self).__init__(message)
        self.steps_used = steps_used


class FuelGauge(object):
    """
    A step budget shared by every computation of one run
    """

    def __init__(self, fuel):
        self.fuel = fuel
        self.used = 0

    @property
    def remaining(self):
        return max(self.fuel - self.used, 0)

    def consume(self, steps=1):
        """
        Take <steps> from the budget

        .. raises:: FuelExhaustedError
        """
        self.used += steps
        if self.used > self.fuel:
            raise FuelExhaustedError("fuel exhausted after %d steps" % self.fuel, steps_used=self.fuel)

    def __str__(self):
        return "%d/%d" % (self.used, self.fuel)


class Evaluator(object):
    """
    Small step reduction at the principal position.
    """

    @classmethod
    def step(cls, term):
        """
        Perform the single reduction at the principal position of <term>

        :param term: the term to reduce
        :type term: EvidenceTerm
        :return: the reduct, or NO_REDEX when the term is canonical, stuck or blocked by a variable
        :rtype: EvidenceTerm or NoRedex

        :Example:

            Evaluator.step(Ap(Lam("x", Var("x")), Inl(Var("v0"))))  # Inl(Var("v0"))
        """
        redex, context = TermAnalyser.principal_redex(term)
        contractum = cls.contract(redex)
        if contractum is None:
            return NO_REDEX
        return context.plug(contractum)

    @classmethod
    def contract(cls, redex):
        """
        Contract <redex> when its principal argument has the shape the operator needs, None otherwise
        """
        if isinstance(redex, Ap):
            if isinstance(redex.fun, Lam):
                return TermAnalyser.subst_term(redex.fun.body, redex.fun.var, redex.arg)
            if isinstance(redex.fun, Const) and isinstance(redex.fun.value, SemanticFunction):
                return redex.fun.value.apply_to(redex.arg)
            return None
        if isinstance(redex, Spread):
            if isinstance(redex.scrut, Pair):
                return TermAnalyser.subst_many(redex.body, {redex.x: redex.scrut.left, redex.y: redex.scrut.right})
            return None
        if isinstance(redex, Decide):
            if isinstance(redex.scrut, Inl):
                return TermAnalyser.subst_term(redex.left, redex.x, redex.scrut.term)
            if isinstance(redex.scrut, Inr):
                return TermAnalyser.subst_term(redex.right, redex.y, redex.scrut.term)
            return None
        if isinstance(redex, CbvAp):
            if isinstance(redex.arg, VALUES):
                return Ap(redex.fun, redex.arg)
            return None
        if isinstance(redex, CbvPair):
            if isinstance(redex.first, VALUES):
                return Pair(redex.first, redex.second)
            return None
        return None

    @classmethod
    def classify(cls, term, steps=0):
        """
        Classify a term that has no redex at its principal position
        """
        if isinstance(term, VALUES):
            return CanonicalForm(term, steps)
        principal, context = TermAnalyser.principal_subterm(term)
        if isinstance(principal, Var):
            return PrincipalVariable(term, principal.name, context, steps)
        return StuckTerm(term, steps)

    @classmethod
    def compute_to_head(cls, term, fuel):
        """
        Reduce until the term is canonical or blocked

        :param term: the term to compute
        :param fuel: the maximum number of steps
        :type fuel: int
        :return: CanonicalForm, PrincipalVariable, StuckTerm or FuelExhausted
        :rtype: EvalOutcome
        """
        steps = 0
        while True:
            if isinstance(term, VALUES):
                return CanonicalForm(term, steps)
            reduct = cls.step(term)
            if reduct is NO_REDEX:
                return cls.classify(term, steps)
            if steps >= fuel:
                logger.debug("[Evaluator] fuel exhausted after %d steps" % steps)
                return FuelExhausted(term, steps)
            term = reduct
            steps += 1

    @classmethod
    def normalize(cls, term, fuel):
        """
        Reduce every redex, head first then inside subterms and under binders

        :param term: the term to normalize
        :param fuel: the maximum number of steps
        :return: the normal form, or FuelExhausted
        :rtype: EvidenceTerm or FuelExhausted
        """
        gauge = FuelGauge(fuel)
        try:
            return cls.normalize_with(term, gauge)
        except FuelExhaustedError:
            return FuelExhausted(term, gauge.fuel)

    @classmethod
    def normalize_with(cls, term, gauge):
        """
        Same as normalize but draws from a shared FuelGauge and raises on exhaustion

        .. raises:: FuelExhaustedError
        """
        while True:
            term = cls._head_normalize(term, gauge)
            rebuilt = cls._normalize_children(term, gauge)
            if rebuilt == term or cls.step(rebuilt) is NO_REDEX:
                return rebuilt
            term = rebuilt

    @classmethod
    def _head_normalize(cls, term, gauge):
        while True:
            reduct = cls.step(term)
            if reduct is NO_REDEX:
                return term
            gauge.consume()
            term = reduct

    @classmethod
    def _normalize_children(cls, term, gauge):
        if isinstance(term, (Var, Stuck, Const)):
            return term
        if isinstance(term, Inl):
            return Inl(cls.normalize_with(term.term, gauge))
        if isinstance(term, Inr):
            return Inr(cls.normalize_with(term.term, gauge))
        if isinstance(term, Lam):
            return Lam(term.var, cls.normalize_with(term.body, gauge))
        if isinstance(term, Pair):
            return Pair(cls.normalize_with(term.left, gauge), cls.normalize_with(term.right, gauge))
        if isinstance(term, Ap):
            return Ap(cls.normalize_with(term.fun, gauge), cls.normalize_with(term.arg, gauge))
        if isinstance(term, CbvAp):
            return CbvAp(cls.normalize_with(term.fun, gauge), cls.normalize_with(term.arg, gauge))
        if isinstance(term, CbvPair):
            return CbvPair(cls.normalize_with(term.first, gauge), cls.normalize_with(term.second, gauge))
        if isinstance(term, Spread):
            return Spread(cls.normalize_with(term.scrut, gauge), term.x, term.y,
                          cls.normalize_with(term.body, gauge))
        if isinstance(term, Decide):
            return Decide(cls.normalize_with(term.scrut, gauge),
                          term.x, cls.normalize_with(term.left, gauge),
                          term.y, cls.normalize_with(term.right, gauge))
        raise TypeError("not an evidence term: %r" % (term,))
