import logging

from lark import Lark, Transformer
from lark.exceptions import LarkError, VisitError

from e2p.core.Models.FinitaryStructure import FinitaryStructure

logging.basicConfig()
logger = logging.getLogger("e2p")

STRUCTURE_GRAMMAR = r"""
    start: item (";" item)* ";"?

    ?item: "domain" "=" INT                        -> domain
         | NAME "=" INT                            -> default
         | NAME "(" INT ("," INT)* ")" "=" INT     -> instance

    NAME: /[A-Za-z_][A-Za-z0-9_']*/

    %import common.INT
    %import common.WS
    %ignore WS
"""


class StructureSyntaxError(Exception):
    """
    The text is not a structure description
    """
    pass


class StructureTransformer(Transformer):

    def domain(self, items):
        return "domain", int(items[0])

    def default(self, items):
        return "default", str(items[0]), int(items[1])

    def instance(self, items):
        return "instance", str(items[0]), tuple(int(item) for item in items[1:-1]), int(items[-1])

    def start(self, items):
        return list(items)


class StructureParser(object):
    """
    Read structure descriptions such as

        domain=2; bot=0; P=1; R(0,1)=2

    NAME=card sets every instance of NAME, NAME(i,j)=card a single instance.
    Atoms that are not described are interpreted as Unit.
    """

    _parser = Lark(STRUCTURE_GRAMMAR, parser="lalr")

    @classmethod
    def parse(cls, text):
        """
        :param text: the description
        :type text: str
        :return: the structure
        :rtype: FinitaryStructure

        .. raises:: StructureSyntaxError
        """
        try:
            items = StructureTransformer().transform(cls._parser.parse(text))
        except VisitError as e:
            raise StructureSyntaxError("invalid structure: %s" % e.orig_exc)
        except LarkError as e:
            raise StructureSyntaxError("invalid structure: %s" % e)

        domain_size = 1
        default_cards = dict()
        atom_interp = dict()
        for item in items:
            if item[0] == "domain":
                domain_size = item[1]
            elif item[0] == "default":
                default_cards[item[1]] = item[2]
            else:
                atom_interp[(item[1], item[2])] = item[3]
        if domain_size < 1:
            raise StructureSyntaxError("the domain must not be empty")
        for name, indexes in atom_interp:
            if any(index >= domain_size for index in indexes):
                raise StructureSyntaxError("%s(%s) is outside the domain of size %d"
                                           % (name, ",".join(str(index) for index in indexes), domain_size))
        structure = FinitaryStructure(domain_size=domain_size, atom_interp=atom_interp, default_cards=default_cards)
        logger.debug("[StructureParser] parsed %s" % structure)
        return structure
