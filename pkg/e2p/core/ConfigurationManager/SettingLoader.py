import logging

from six import with_metaclass

from e2p.core.Models.Singleton import Singleton
from e2p.core.Models.settings.Options import Options
from e2p.core.Models.settings.Settings import Settings
from e2p.core.Models.settings.Trace import Trace, DEFAULT_TEMPLATE
from e2p.core.ProofChecker import LOGICS
from e2p.core.Utils.Utils import Utils
from .YAMLLoader import YAMLLoader

FILE_NAME = "settings.yml"

logging.basicConfig()
logger = logging.getLogger("e2p")


class SettingInvalidException(Exception):
    """
    Some data must match the expected value/type

    .. seealso:: Settings
    """
    pass


class NullSettingException(Exception):
    """
    Some Attributes can not be Null

    .. seealso:: Settings
    """
    pass


class SettingNotFound(Exception):
    """
    The settings file is missing

    .. seealso:: Settings
    """
    pass


class SettingLoader(with_metaclass(Singleton, object)):
    """
    This Class is used to get the Settings YAML and the Settings as an object
    """

    def __init__(self, file_path=None):
        self.file_path = file_path
        if self.file_path is None:
            self.file_path = Utils.get_real_file_path(FILE_NAME)
        else:
            self.file_path = Utils.get_real_file_path(file_path)
        # if the returned file path is none, the file doesn't exist
        if self.file_path is None:
            raise SettingNotFound("Settings.yml file not found")
        self.yaml_config = self._get_yaml_config()
        self.settings = self._get_settings()

    def _get_yaml_config(self):
        """
        Load the settings YAML file

        :return: The loaded settings YAML
        :rtype: dict

        .. warnings:: Private
        """
        return YAMLLoader.get_config(self.file_path)

    def _get_settings(self):
        """
        Build the Settings object from the loaded YAML

        :return: The loaded Settings
        :rtype: Settings

        .. seealso:: Settings
        .. warnings:: Private
        """
        settings = self.yaml_config
        if not isinstance(settings, dict):
            raise SettingInvalidException("the settings file must be a mapping")
        setting_object = Settings(options=self._get_options(settings),
                                  trace=self._get_trace(settings))
        logger.debug("[SettingsLoader] settings loaded from %s" % self.file_path)
        return setting_object

    @staticmethod
    def _get_options(settings):
        """
        Return the Options settings
        if not set, default values are :
        fuel: 100000
        kmax: 2
        atomcard: 2
        seed: 0
        logic: minimal
        pre_normalize: False
        check_invariants: False
        placeholder_atom: bot

        :param settings: The YAML settings file
        :type settings: dict
        :return: An Options with the default flags
        :rtype: Options

        .. raises:: NullSettingException, SettingInvalidException
        """
        values = Options().values()

        try:
            options = settings["options"]
            if options is None:
                raise NullSettingException("Attribute options is null")
            for key in values:
                if key in options:
                    if options[key] is None:
                        raise NullSettingException("Attribute %s is null" % key)
                    values[key] = options[key]
        except KeyError as e:
            logger.debug("[SettingsLoader] missing settings key: %s" % e)

        for key in ("fuel", "kmax", "atomcard"):
            if isinstance(values[key], bool) or not isinstance(values[key], int) or values[key] < 1:
                raise SettingInvalidException("%s must be a positive integer" % key)
        if isinstance(values["seed"], bool) or not isinstance(values["seed"], int):
            raise SettingInvalidException("seed must be an integer")
        if values["logic"] not in LOGICS:
            raise SettingInvalidException("logic must be one of %s" % ", ".join(LOGICS))
        for key in ("pre_normalize", "check_invariants"):
            if not isinstance(values[key], bool):
                raise SettingInvalidException("%s must be True or False" % key)
        if not isinstance(values["placeholder_atom"], str) or not values["placeholder_atom"].isidentifier():
            raise SettingInvalidException("placeholder_atom must be an atom name")

        options = Options(**values)
        logger.debug("[SettingsLoader] Options: %s" % options)
        return options

    @staticmethod
    def _get_trace(settings):
        """
        Return the Trace settings, the default template when not set

        :param settings: The YAML settings file
        :type settings: dict
        :rtype: Trace

        .. raises:: NullSettingException
        """
        template = DEFAULT_TEMPLATE
        try:
            trace = settings["trace"]
            if trace is None or trace.get("template", template) is None:
                raise NullSettingException("Attribute trace template is null")
            template = trace.get("template", template)
        except KeyError as e:
            logger.debug("[SettingsLoader] missing settings key: %s" % e)
        return Trace(template=str(template))
