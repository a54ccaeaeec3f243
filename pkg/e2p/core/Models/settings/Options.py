from e2p.core.Models.settings.SettingsEntry import SettingsEntry


class Options(SettingsEntry):
    """
    Default values of the command line flags

    .. note:: defined under "options" in the settings.yml
    """

    def __init__(self,
                 fuel=100000,
                 kmax=2,
                 atomcard=2,
                 seed=0,
                 logic="minimal",
                 pre_normalize=False,
                 check_invariants=False,
                 placeholder_atom="bot"):
        super(Options, self).__init__(name="Options")
        self.fuel = fuel
        self.kmax = kmax
        self.atomcard = atomcard
        self.seed = seed
        self.logic = logic
        self.pre_normalize = pre_normalize
        self.check_invariants = check_invariants
        self.placeholder_atom = placeholder_atom

    def serialize(self):
        return {
            'name': self.name,
            'fuel': self.fuel,
            'kmax': self.kmax,
            'atomcard': self.atomcard,
            'seed': self.seed,
            'logic': self.logic,
            'pre_normalize': self.pre_normalize,
            'check_invariants': self.check_invariants,
            'placeholder_atom': self.placeholder_atom
        }
