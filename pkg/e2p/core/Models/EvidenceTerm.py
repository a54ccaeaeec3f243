from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class EvidenceTerm:
    """
    Untyped realizer. Canonical forms are Pair, Inl, Inr and Lam.
    """

    def __str__(self):
        return TermPrinter.print_term(self)


@dataclass(frozen=True)
class Var(EvidenceTerm):
    name: str


@dataclass(frozen=True)
class Pair(EvidenceTerm):
    left: EvidenceTerm
    right: EvidenceTerm


@dataclass(frozen=True)
class Inl(EvidenceTerm):
    term: EvidenceTerm


@dataclass(frozen=True)
class Inr(EvidenceTerm):
    term: EvidenceTerm


@dataclass(frozen=True)
class Lam(EvidenceTerm):
    var: str
    body: EvidenceTerm


@dataclass(frozen=True)
class Ap(EvidenceTerm):
    fun: EvidenceTerm
    arg: EvidenceTerm


@dataclass(frozen=True)
class Spread(EvidenceTerm):
    scrut: EvidenceTerm
    x: str
    y: str
    body: EvidenceTerm


@dataclass(frozen=True)
class Decide(EvidenceTerm):
    scrut: EvidenceTerm
    x: str
    left: EvidenceTerm
    y: str
    right: EvidenceTerm


@dataclass(frozen=True)
class CbvAp(EvidenceTerm):
    fun: EvidenceTerm
    arg: EvidenceTerm


@dataclass(frozen=True)
class CbvPair(EvidenceTerm):
    first: EvidenceTerm
    second: EvidenceTerm


@dataclass(frozen=True)
class Stuck(EvidenceTerm):
    pass


@dataclass(frozen=True)
class Const(EvidenceTerm):
    """
    A semantic value placed in a term by the model evaluator. Never parsed, never built by the proof driver.
    """
    value: Any


class SemanticFunction(object):
    """
    Value of a Const that can be applied. apply_to receives the argument term and returns the result term.
    """

    def apply_to(self, argument):
        raise NotImplementedError


CANONICAL = (Pair, Inl, Inr, Lam)
VALUES = CANONICAL + (Const,)

# field names of the principal (evaluated first) position of each non canonical constructor
PRINCIPAL_FIELD = {
    Decide: "scrut",
    Spread: "scrut",
    Ap: "fun",
    CbvAp: "arg",
    CbvPair: "first",
}

PREC_LAM = 0
PREC_APP = 1
PREC_PREFIX = 2
PREC_ATOM = 3


class TermPrinter(object):
    """
    Canonical text rendering of evidence terms, the inverse of TermParser
    """

    @classmethod
    def print_term(cls, term):
        """
        :param term: the term to render
        :type term: EvidenceTerm
        :return: the canonical text
        :rtype: str
        """
        return cls._print(term, PREC_LAM)

    @classmethod
    def _print(cls, term, context):
        text, own = cls._render(term)
        if own < context:
            return "(%s)" % text
        return text

    @classmethod
    def _render(cls, term):
        if isinstance(term, Var):
            return term.name, PREC_ATOM
        if isinstance(term, Stuck):
            return "stuck", PREC_ATOM
        if isinstance(term, Const):
            return "#%s" % (term.value,), PREC_ATOM
        if isinstance(term, Pair):
            return "<%s, %s>" % (cls._print(term.left, PREC_LAM), cls._print(term.right, PREC_LAM)), PREC_ATOM
        if isinstance(term, Inl):
            return "inl %s" % cls._print(term.term, PREC_ATOM), PREC_PREFIX
        if isinstance(term, Inr):
            return "inr %s" % cls._print(term.term, PREC_ATOM), PREC_PREFIX
        if isinstance(term, Lam):
            return "\\%s. %s" % (term.var, cls._print(term.body, PREC_LAM)), PREC_LAM
        if isinstance(term, Ap):
            return "%s %s" % (cls._print(term.fun, PREC_APP), cls._print(term.arg, PREC_ATOM)), PREC_APP
        if isinstance(term, Spread):
            return "spread(%s; %s, %s. %s)" % (cls._print(term.scrut, PREC_LAM), term.x, term.y,
                                               cls._print(term.body, PREC_LAM)), PREC_ATOM
        if isinstance(term, Decide):
            return "decide(%s; %s. %s; %s. %s)" % (cls._print(term.scrut, PREC_LAM),
                                                  term.x, cls._print(term.left, PREC_LAM),
                                                  term.y, cls._print(term.right, PREC_LAM)), PREC_ATOM
        if isinstance(term, CbvAp):
            return "cbv(%s; %s)" % (cls._print(term.fun, PREC_LAM), cls._print(term.arg, PREC_LAM)), PREC_ATOM
        if isinstance(term, CbvPair):
            return "cbvpair(%s; %s)" % (cls._print(term.first, PREC_LAM),
                                        cls._print(term.second, PREC_LAM)), PREC_ATOM
        raise TypeError("not an evidence term: %r" % (term,))
