class DerivationStep(object):
    """
    One application of a rule on an evidence structure.

    .. note:: proof_rule is None for the rules that only rewrite the evidence (ExPair, ApplyConst, AllApply,
              ApplyModel). params are the parameters of the emitted proof rule, in its positional order.
    """

    def __init__(self, rule, parent, children=(), proof_rule=None, params=()):
        self.rule = rule
        self.parent = parent
        self.children = tuple(children)
        self.proof_rule = proof_rule
        self.params = tuple(params)

    def serialize(self):
        """
        This method allows to serialize in a proper way this object

        :return: A dict of rule, parent, children, proof_rule and params
        :rtype: Dict
        """
        return {
            'rule': str(self.rule),
            'parent': str(self.parent),
            'children': [str(child) for child in self.children],
            'proof_rule': str(self.proof_rule) if self.proof_rule is not None else None,
            'params': list(self.params)
        }

    def __str__(self):
        return str(self.serialize())

    def __eq__(self, other):
        return self.__dict__ == other.__dict__
