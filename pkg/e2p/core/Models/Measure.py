from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class Measure:
    """
    Termination measure of an evidence term, compared lexicographically in field order.

    nc counts Decide, Spread and Ap nodes, cbv counts CbvAp nodes, npr counts Pair nodes,
    cn counts CbvPair, Inl and Inr nodes and size counts every node.
    """
    nc: int = 0
    cbv: int = 0
    npr: int = 0
    cn: int = 0
    size: int = 0

    def serialize(self):
        return {
            'nc': self.nc,
            'cbv': self.cbv,
            'npr': self.npr,
            'cn': self.cn,
            'size': self.size
        }

    def __str__(self):
        return "<%d, %d, %d, %d, %d>" % (self.nc, self.cbv, self.npr, self.cn, self.size)
