from e2p.core.Models.settings.Options import Options
from e2p.core.Models.settings.Trace import Trace


class Settings(object):
    """
    Represents the settings loaded from the settings.yml file
    """

    def __init__(self, options=None, trace=None):
        self.options = options if options is not None else Options()
        self.trace = trace if trace is not None else Trace()

    def serialize(self):
        """
        This method allows to serialize in a proper way this object

        :return: A dict of settings
        :rtype: Dict
        """
        return {
            'options': self.options.serialize(),
            'trace': self.trace.serialize()
        }

    def __str__(self):
        return str(self.serialize())

    def __eq__(self, other):
        return self.__dict__ == other.__dict__
