from .Singleton import Singleton
from .Formula import Formula, Atom, FalseC, And, Or, Imp, All, Ex
from .EvidenceTerm import EvidenceTerm
from .ProofTree import ProofTree, ProofRule
