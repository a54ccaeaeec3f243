from dataclasses import dataclass

from e2p.core.Models.EvidenceTerm import EvidenceTerm
from e2p.core.Models.HoleContext import HoleContext


class NoRedex(object):
    """
    Result of a step on a term without a redex at its principal position
    """
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(NoRedex, cls).__new__(cls)
        return cls._instance

    def __str__(self):
        return "NoRedex"


NO_REDEX = NoRedex()


@dataclass(frozen=True)
class EvalOutcome:
    """
    Classification of a term after computing it to head shape
    """

    @property
    def is_final(self):
        return True


@dataclass(frozen=True)
class CanonicalForm(EvalOutcome):
    term: EvidenceTerm
    steps: int = 0


@dataclass(frozen=True, eq=False)
class PrincipalVariable(EvalOutcome):
    term: EvidenceTerm
    var: str
    context: HoleContext
    steps: int = 0

    def __eq__(self, other):
        return isinstance(other, PrincipalVariable) and (self.term, self.var) == (other.term, other.var)


@dataclass(frozen=True)
class StuckTerm(EvalOutcome):
    term: EvidenceTerm
    steps: int = 0


@dataclass(frozen=True)
class FuelExhausted(EvalOutcome):
    partial: EvidenceTerm
    steps_used: int

    @property
    def steps(self):
        return self.steps_used

    @property
    def is_final(self):
        return False
