from dataclasses import dataclass
from typing import Optional

from e2p.core.Models.EvidenceTerm import Var, Pair, Inl, Inr
from e2p.core.Models.Formula import Formula


@dataclass(frozen=True)
class Pattern:
    """
    A term built from declared variables by pairing and injections
    """

    def to_term(self):
        raise NotImplementedError

    def leaves(self):
        """
        The variable leaves, left to right
        """
        raise NotImplementedError

    def replace(self, name, pattern):
        """
        Substitute <pattern> for the evidence variable leaf <name>
        """
        raise NotImplementedError

    def __str__(self):
        return str(self.to_term())


@dataclass(frozen=True)
class PVar(Pattern):
    name: str
    type: Optional[Formula] = None

    def to_term(self):
        return Var(self.name)

    def leaves(self):
        return [self]

    def replace(self, name, pattern):
        return pattern if self.name == name else self


@dataclass(frozen=True)
class PDomain(Pattern):
    name: str

    def to_term(self):
        return Var(self.name)

    def leaves(self):
        return [self]

    def replace(self, name, pattern):
        return self


@dataclass(frozen=True)
class PPair(Pattern):
    left: Pattern
    right: Pattern

    def to_term(self):
        return Pair(self.left.to_term(), self.right.to_term())

    def leaves(self):
        return self.left.leaves() + self.right.leaves()

    def replace(self, name, pattern):
        return PPair(self.left.replace(name, pattern), self.right.replace(name, pattern))


@dataclass(frozen=True)
class PInl(Pattern):
    pattern: Pattern

    def to_term(self):
        return Inl(self.pattern.to_term())

    def leaves(self):
        return self.pattern.leaves()

    def replace(self, name, pattern):
        return PInl(self.pattern.replace(name, pattern))


@dataclass(frozen=True)
class PInr(Pattern):
    pattern: Pattern

    def to_term(self):
        return Inr(self.pattern.to_term())

    def leaves(self):
        return self.pattern.leaves()

    def replace(self, name, pattern):
        return PInr(self.pattern.replace(name, pattern))
