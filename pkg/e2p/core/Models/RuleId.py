from enum import Enum


class RuleId(Enum):
    """
    The sixteen rules matching an evidence structure.
    The first seven need canonical evidence, the others a principal variable.
    """
    AndPair = "AndPair"
    ExPair = "ExPair"
    ExValPair = "ExValPair"
    OrInl = "OrInl"
    OrInr = "OrInr"
    ImpLam = "ImpLam"
    AllLam = "AllLam"
    VarAx = "VarAx"
    DecideR = "DecideR"
    AndSpread = "AndSpread"
    ExSpread = "ExSpread"
    ApplyConst = "ApplyConst"
    ImpApply = "ImpApply"
    AllApply = "AllApply"
    ApplyModel = "ApplyModel"
    AllCbv = "AllCbv"

    @property
    def is_canonical(self):
        return self in CANONICAL_RULES

    @property
    def children_count(self):
        if self is RuleId.VarAx:
            return 0
        if self in (RuleId.AndPair, RuleId.DecideR, RuleId.ImpApply):
            return 2
        return 1

    def __str__(self):
        return self.value


CANONICAL_RULES = frozenset([RuleId.AndPair, RuleId.ExPair, RuleId.ExValPair, RuleId.OrInl, RuleId.OrInr,
                             RuleId.ImpLam, RuleId.AllLam])

# rules that only rewrite the evidence and add no sequent calculus step
EVIDENCE_ONLY_RULES = frozenset([RuleId.ExPair, RuleId.ApplyConst, RuleId.AllApply, RuleId.ApplyModel])
