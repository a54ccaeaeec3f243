import logging
import os

logging.basicConfig()
logger = logging.getLogger("e2p")


class FileManager:
    """
    Class used to manage the output files
    """
    def __init__(self):
        pass

    @staticmethod
    def write_in_file(file_path, content):
        """
        Write contents into a file, creating its directory when needed

        :param file_path: the path of the file to write on
        :type file_path: str
        :param content: the contents to write in the file
        :type content: str
        :return: True if the file holds the content
        """
        try:
            directory = os.path.dirname(file_path)
            if directory and not os.path.exists(directory):
                os.makedirs(directory)
            with open(file_path, "w") as file_open:
                file_open.write(content)
            return not FileManager.file_is_empty(file_path) or content == ""
        except (IOError, OSError) as e:
            logger.error("I/O error(%s): %s", e.errno, e.strerror)
            return False

    @staticmethod
    def file_is_empty(file_path):
        """
        Check if the file is empty
        :param file_path: the path of the file
        :return: True if the file is empty, False otherwise
        """
        return os.path.getsize(file_path) == 0

    @staticmethod
    def is_path_creatable(pathname):
        """
        `True` if the current user has sufficient permissions to create the passed
        pathname; `False` otherwise.
        """
        dirname = os.path.dirname(pathname) or os.getcwd()
        while not os.path.exists(dirname):
            parent = os.path.dirname(dirname)
            if parent == dirname:
                return False
            dirname = parent
        return os.access(dirname, os.W_OK)

    @staticmethod
    def is_path_exists_or_creatable(pathname):
        """
        `True` if the passed pathname either currently exists as a file or is creatable; `False` otherwise.
        Never raises.
        """
        try:
            if os.path.isdir(pathname):
                return False
            return os.path.exists(pathname) or FileManager.is_path_creatable(pathname)
        except OSError as e:
            logger.error("OSError(%s): %s", e.errno, e.strerror)
            return False
