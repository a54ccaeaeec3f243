import inspect
import logging
import os
import re
import sys

logging.basicConfig()
logger = logging.getLogger("e2p")

INDEXED_NAME = re.compile(r"^([a-z])(\d+)$")


def pipe_print(line, stream=None):
    print(line, file=stream if stream is not None else sys.stdout)


class Utils(object):
    color_list = dict(
        PURPLE='\033[95m',
        BLUE='\033[94m',
        GREEN='\033[92m',
        YELLOW='\033[93m',
        RED='\033[91m',
        ENDLINE='\033[0m',
        BOLD='\033[1m',
        UNDERLINE='\033[4m'
    )

    ##################
    #
    # Shell properly displayed
    #
    #########
    @classmethod
    def print_info(cls, text_to_print):
        pipe_print(cls.color_list["BLUE"] + text_to_print + cls.color_list["ENDLINE"], sys.stderr)
        logger.debug(text_to_print)

    @classmethod
    def print_success(cls, text_to_print):
        pipe_print(cls.color_list["GREEN"] + text_to_print + cls.color_list["ENDLINE"], sys.stderr)
        logger.debug(text_to_print)

    @classmethod
    def print_warning(cls, text_to_print):
        pipe_print(cls.color_list["YELLOW"] + text_to_print + cls.color_list["ENDLINE"], sys.stderr)
        logger.debug(text_to_print)

    @classmethod
    def print_danger(cls, text_to_print):
        pipe_print(cls.color_list["RED"] + text_to_print + cls.color_list["ENDLINE"], sys.stderr)
        logger.debug(text_to_print)

    @staticmethod
    def print_plain(text_to_print):
        """
        Machine readable output (proofs, terms, formulas) goes uncolored to stdout
        """
        pipe_print(text_to_print)

    @staticmethod
    def print_trace(text_to_print):
        pipe_print(text_to_print, sys.stderr)

    ##################
    #
    # Files
    #
    #########
    @staticmethod
    def get_current_file_parent_parent_path(current_script_path):
        parent_parent_path = os.path.normpath(current_script_path + os.sep + os.pardir + os.sep + os.pardir)
        return parent_parent_path

    @classmethod
    def get_real_file_path(cls, file_path_to_test):
        """
        Try to return a full path from a given <file_path_to_test>
        If the path is an absolute on, we return it directly.

        If the path is relative, we try to get the full path in this order:
        - from the current directory where e2p has been called + the file_path_to_test.
        - from /etc/e2p + file_path_to_test
        - from the root of the e2p package

        :param file_path_to_test: file path to test
        :type file_path_to_test: str
        :return: absolute path to the file file_path_to_test or None if is doesn't exist
        """

        if not os.path.isabs(file_path_to_test):
            current_script_path = os.path.dirname(os.path.abspath(inspect.getfile(inspect.currentframe())))
            path_order = {
                1: os.getcwd() + os.sep + file_path_to_test,
                2: "/etc/e2p" + os.sep + file_path_to_test,
                # from /an/unknown/path/e2p/e2p/core/Utils to /an/unknown/path/e2p/e2p
                3: cls.get_current_file_parent_parent_path(current_script_path) + os.sep + file_path_to_test
            }

            for key in sorted(path_order):
                new_file_path_to_test = path_order[key]
                logger.debug("Try to load file from %s: %s" % (key, new_file_path_to_test))
                if os.path.isfile(new_file_path_to_test):
                    logger.debug("File found in %s" % new_file_path_to_test)
                    return new_file_path_to_test
            return None

        if os.path.isfile(file_path_to_test):
            return file_path_to_test
        return None

    @staticmethod
    def read_text_file(file_path):
        with open(file_path, "r", encoding="utf-8") as file_open:
            return file_open.read()

    ##################
    #
    # Names
    #
    #########
    @staticmethod
    def name_index(name, prefix):
        """
        Index of an indexed variable name such as v12 or d0.

        :param name: the variable name
        :param prefix: the expected one letter prefix
        :return: the index, or None when the name is not indexed with this prefix
        :rtype: int
        """
        match = INDEXED_NAME.match(name)
        if match is None or match.group(1) != prefix:
            return None
        return int(match.group(2))

    @classmethod
    def next_index(cls, names, prefix):
        """
        The least index above every indexed name with the given prefix.
        """
        indexes = [cls.name_index(name, prefix) for name in names]
        indexes = [index for index in indexes if index is not None]
        return max(indexes) + 1 if indexes else 0

    @staticmethod
    def fresh_name(base, avoid):
        """
        Return <base> if unused, otherwise <base>_<n> with the least n not in <avoid>.

        :param base: preferred name
        :param avoid: names already taken
        :type avoid: set
        :rtype: str
        """
        if base not in avoid:
            return base
        counter = 1
        while "%s_%d" % (base, counter) in avoid:
            counter += 1
        return "%s_%d" % (base, counter)
