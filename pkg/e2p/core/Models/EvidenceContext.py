from dataclasses import dataclass

from e2p.core.Models.Formula import Formula
from e2p.core.Models.Pattern import Pattern
from e2p.core.Utils.Utils import Utils


@dataclass(frozen=True)
class ContextEntry:
    pass


@dataclass(frozen=True)
class DomainDecl(ContextEntry):
    name: str

    def __str__(self):
        return "%s:D" % self.name


@dataclass(frozen=True)
class HypDecl(ContextEntry):
    name: str
    type: Formula

    def __str__(self):
        return "%s:%s" % (self.name, self.type)


@dataclass(frozen=True)
class ConstConstraint(ContextEntry):
    """
    v = const(body): the function v is constant with value body
    """
    name: str
    body: Pattern

    def __str__(self):
        return "%s = const(%s)" % (self.name, self.body)


@dataclass(frozen=True)
class ApConstraint(ContextEntry):
    """
    cbv(fun; domain) = body
    """
    fun: str
    domain: str
    body: Pattern

    def __str__(self):
        return "cbv(%s; %s) = %s" % (self.fun, self.domain, self.body)


DECLARATIONS = (DomainDecl, HypDecl)
CONSTRAINTS = (ConstConstraint, ApConstraint)


class EvidenceContext(object):
    """
    Ordered declarations and constraints. Every update returns a new context.

    The fresh counters always exceed every index in use, so a variable created later has a larger index.
    """

    def __init__(self, entries=(), next_evidence_index=None, next_domain_index=None):
        self.entries = tuple(entries)
        names = [entry.name for entry in self.entries if isinstance(entry, DECLARATIONS)]
        floor_evidence = Utils.next_index(names, "v")
        floor_domain = Utils.next_index(names, "d")
        self.next_evidence_index = max(floor_evidence, next_evidence_index or 0)
        self.next_domain_index = max(floor_domain, next_domain_index or 0)

    ##################
    #
    # Lookup
    #
    #########
    def declaration(self, name):
        for entry in self.entries:
            if isinstance(entry, DECLARATIONS) and entry.name == name:
                return entry
        return None

    def type_of(self, name):
        """
        :return: the declared formula of the evidence variable <name>, None if not declared
        :rtype: Formula
        """
        entry = self.declaration(name)
        if isinstance(entry, HypDecl):
            return entry.type
        return None

    def declares_domain(self, name):
        return isinstance(self.declaration(name), DomainDecl)

    def declares(self, name):
        return self.declaration(name) is not None

    def position(self, name):
        for index, entry in enumerate(self.entries):
            if isinstance(entry, DECLARATIONS) and entry.name == name:
                return index
        return None

    def const_constraint(self, name):
        for entry in self.entries:
            if isinstance(entry, ConstConstraint) and entry.name == name:
                return entry.body
        return None

    def ap_constraint(self, fun, domain):
        for entry in self.entries:
            if isinstance(entry, ApConstraint) and entry.fun == fun and entry.domain == domain:
                return entry.body
        return None

    def domain_vars(self):
        return [entry.name for entry in self.entries if isinstance(entry, DomainDecl)]

    def hypotheses(self):
        return [entry for entry in self.entries if isinstance(entry, HypDecl)]

    def constraints(self):
        return [entry for entry in self.entries if isinstance(entry, CONSTRAINTS)]

    ##################
    #
    # Updates
    #
    #########
    def extend(self, *entries):
        """
        Append entries at the end of the context
        """
        return self.replace_entries(self.entries + tuple(entries))

    def replace_entries(self, entries):
        return EvidenceContext(entries,
                               next_evidence_index=self.next_evidence_index,
                               next_domain_index=self.next_domain_index)

    def fresh_evidence_var(self):
        """
        Return a fresh evidence variable v<k> and the context with its counter moved past it

        :rtype: tuple(str, EvidenceContext)
        """
        name = "v%d" % self.next_evidence_index
        return name, EvidenceContext(self.entries,
                                     next_evidence_index=self.next_evidence_index + 1,
                                     next_domain_index=self.next_domain_index)

    def fresh_domain_var(self):
        """
        Return a fresh domain variable d<k> and the context with its counter moved past it

        :rtype: tuple(str, EvidenceContext)
        """
        name = "d%d" % self.next_domain_index
        return name, EvidenceContext(self.entries,
                                     next_evidence_index=self.next_evidence_index,
                                     next_domain_index=self.next_domain_index + 1)

    def serialize(self):
        return {
            'entries': [str(entry) for entry in self.entries],
            'next_evidence_index': self.next_evidence_index,
            'next_domain_index': self.next_domain_index
        }

    def __str__(self):
        return "; ".join(str(entry) for entry in self.entries)

    def __eq__(self, other):
        return isinstance(other, EvidenceContext) and self.__dict__ == other.__dict__

    def __len__(self):
        return len(self.entries)


class EvidenceStructure(object):
    """
    H |= G, evd: a context, a minimal goal and the evidence for it
    """

    def __init__(self, context, goal, evidence):
        self.context = context
        self.goal = goal
        self.evidence = evidence

    def with_evidence(self, evidence):
        return EvidenceStructure(self.context, self.goal, evidence)

    def serialize(self):
        return {
            'context': str(self.context),
            'goal': str(self.goal),
            'evidence': str(self.evidence)
        }

    def __str__(self):
        return "%s |= %s, %s" % (self.context, self.goal, self.evidence)

    def __eq__(self, other):
        return isinstance(other, EvidenceStructure) and self.__dict__ == other.__dict__
