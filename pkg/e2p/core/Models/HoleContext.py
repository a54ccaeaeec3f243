import dataclasses


class HoleContext(object):
    """
    A term with one hole, stored as the path of (node, field) frames from the root down to the hole
    """

    def __init__(self, frames=()):
        self.frames = tuple(frames)

    def plug(self, term):
        """
        Rebuild the root term with <term> placed in the hole
        """
        for node, field in reversed(self.frames):
            term = dataclasses.replace(node, **{field: term})
        return term

    def depth(self):
        return len(self.frames)

    def __str__(self):
        return "[%s]" % ".".join("%s.%s" % (type(node).__name__, field) for node, field in self.frames)

    def __eq__(self, other):
        return self.__dict__ == other.__dict__
