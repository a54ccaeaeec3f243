class Singleton(type):
    """
    Keep one instance per class
    """
    _instances = {}

    def __call__(cls, *args, **kwargs):
        if cls not in cls._instances:
            cls._instances[cls] = super(Singleton, cls).__call__(*args, **kwargs)
        return cls._instances[cls]

    @classmethod
    def reset(mcs, cls=None):
        """
        Forget the instance of <cls>, or every instance when cls is None
        """
        if cls is None:
            mcs._instances.clear()
        else:
            mcs._instances.pop(cls, None)
