from e2p.core.Models.SemValue import AtomToken, VStar, VDomain

UNIT = (VStar(),)


class FinitaryStructure(object):
    """
    A structure over the domain {0, ..., k-1} interpreting every atom instance as a finite set of tokens.

    .. note:: an atom instance is looked up in atom_interp by (name, indexes), then by name in default_cards.
              Atoms found in neither are interpreted as Unit. A cardinality c stands for the tokens t0 ... t(c-1).
    """

    def __init__(self, domain_size=1, atom_interp=None, default_cards=None, environment=None, typing=None):
        self.domain_size = domain_size
        self.atom_interp = dict(atom_interp or {})
        self.default_cards = dict(default_cards or {})
        self.environment = dict(environment or {})
        self.typing = dict(typing or {})

    def domain(self):
        return [VDomain(index) for index in range(self.domain_size)]

    def atom_values(self, name, indexes):
        """
        :param name: relation name
        :param indexes: tuple of domain element indexes
        :return: the members of the atom instance, in enumeration order
        :rtype: tuple
        """
        key = (name, tuple(indexes))
        if key in self.atom_interp:
            return self.tokens(self.atom_interp[key])
        if name in self.default_cards:
            return self.tokens(self.default_cards[name])
        return UNIT

    @staticmethod
    def tokens(cardinality):
        return tuple(AtomToken(index) for index in range(cardinality))

    def bind(self, name, value, formula=None):
        """
        Return a copy whose environment maps <name> to <value>, typed by <formula> for evidence variables
        """
        typing = dict(self.typing)
        if formula is not None:
            typing[name] = formula
        return FinitaryStructure(self.domain_size, self.atom_interp, self.default_cards,
                                 dict(self.environment, **{name: value}), typing)

    def serialize(self):
        return {
            'domain_size': self.domain_size,
            'atom_interp': {"%s(%s)" % (name, ",".join(str(i) for i in indexes)): card
                            for (name, indexes), card in self.atom_interp.items()},
            'default_cards': self.default_cards,
            'environment': {name: str(value) for name, value in self.environment.items()}
        }

    def __str__(self):
        """
        The structure description, as read by StructureParser
        """
        parts = ["domain=%d" % self.domain_size]
        parts.extend("%s=%d" % (name, card) for name, card in sorted(self.default_cards.items()))
        for (name, indexes), card in sorted(self.atom_interp.items()):
            if indexes:
                parts.append("%s(%s)=%d" % (name, ",".join(str(index) for index in indexes), card))
            else:
                parts.append("%s=%d" % (name, card))
        return "; ".join(parts)

    def __eq__(self, other):
        return isinstance(other, FinitaryStructure) and self.__dict__ == other.__dict__
