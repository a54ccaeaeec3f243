class SettingsEntry(object):
    """
    A section of the settings file. Subclasses list their keys in serialize().
    """

    def __init__(self, name=None):
        self.name = name

    def serialize(self):
        return {
            'name': self.name
        }

    def values(self):
        """
        The keys of the section and their values, without the entry name

        :rtype: dict
        """
        values = self.serialize()
        del values["name"]
        return values

    def __str__(self):
        return str(self.serialize())

    def __eq__(self, other):
        return self.__dict__ == other.__dict__
