from .FormulaParser import FormulaParser
from .TermParser import TermParser
from .ProofParser import ProofParser
from .StructureParser import StructureParser
