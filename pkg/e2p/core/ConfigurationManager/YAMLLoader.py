import logging
import os

import yaml

logging.basicConfig()
logger = logging.getLogger("e2p")


class YAMLFileNotFound(Exception):
    """
    YAML file has not been found
    """
    pass


class YAMLFileEmpty(Exception):
    """
    YAML file empty
    """
    pass


class YAMLLoader:
    """
    Simple Class to Verify / Load a YAML file.
    """

    def __init__(self):
        pass

    @classmethod
    def get_config(cls, yaml_file):
        """
        Return the content of the provided YAML configuration file

        :param yaml_file: The path of the configuration file
        :type yaml_file: str
        :return: the loaded document
        :rtype: dict

        :Example:

            YAMLLoader.get_config(settings_file_path)

        .. seealso::  SettingLoader
        .. raises:: YAMLFileNotFound, YAMLFileEmpty
        .. warnings:: Class Method and Public
        """
        logger.debug("[YAMLLoader] File path to load: %s " % yaml_file)
        if not os.path.isfile(yaml_file):
            raise YAMLFileNotFound("File %s not found" % yaml_file)
        with open(yaml_file, "r") as f:
            data = yaml.full_load(f)
        if data is None:
            raise YAMLFileEmpty("[YAMLLoader] File %s is empty" % yaml_file)
        return data
