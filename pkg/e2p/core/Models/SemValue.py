from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class SemValue:
    """
    Canonical inhabitant of a finitary type
    """
    pass


@dataclass(frozen=True)
class AtomToken(SemValue):
    index: int

    def __str__(self):
        return "t%d" % self.index


@dataclass(frozen=True)
class VStar(SemValue):
    """
    The only member of Unit
    """

    def __str__(self):
        return "*"


@dataclass(frozen=True)
class VDomain(SemValue):
    """
    Element of M(D), numbers 0 <= index < k
    """
    index: int

    def __str__(self):
        return "%d" % self.index


@dataclass(frozen=True)
class VPair(SemValue):
    left: SemValue
    right: SemValue

    def __str__(self):
        return "<%s, %s>" % (self.left, self.right)


@dataclass(frozen=True)
class VInl(SemValue):
    value: SemValue

    def __str__(self):
        return "inl %s" % self.value


@dataclass(frozen=True)
class VInr(SemValue):
    value: SemValue

    def __str__(self):
        return "inr %s" % self.value


@dataclass(frozen=True)
class VTable(SemValue):
    """
    Graph of a total function over a finite type: (argument, result) pairs without duplicate arguments
    """
    graph: Tuple[Tuple[SemValue, SemValue], ...] = ()

    def lookup(self, argument):
        for key, result in self.graph:
            if key == argument:
                return result
        return None

    def keys(self):
        return [key for key, _ in self.graph]

    def __str__(self):
        return "{%s}" % ", ".join("%s -> %s" % (key, result) for key, result in self.graph)
