import logging

from e2p.core.FormulaTools import FormulaTools
from e2p.core.Models.EvidenceContext import EvidenceStructure, DomainDecl, HypDecl, ConstConstraint, \
    ApConstraint
from e2p.core.Models.Formula import And, Or, Ex
from e2p.core.Models.Pattern import PVar, PDomain, PPair, PInl, PInr
from e2p.core.TermAnalyser import TermAnalyser

logging.basicConfig()
logger = logging.getLogger("e2p")


class IncompatiblePattern(Exception):
    """
    The shape of the pattern cannot inhabit the declared type of the variable
    """
    pass


class ContextEditor(object):
    """
    Replace an evidence variable of a structure by a pattern, the way the left rules destruct hypotheses.
    """

    @classmethod
    def subst_in_structure(cls, structure, name, pattern):
        """
        Substitute <pattern> for the evidence variable <name> everywhere in the structure.
        The declaration of <name> is replaced, at the same position, by the declarations of the
        pattern leaves that the context does not declare yet.

        :param structure: the evidence structure
        :type structure: EvidenceStructure
        :param name: the declared evidence variable
        :type name: str
        :param pattern: the pattern to put in place of <name>
        :type pattern: Pattern
        :return: the new evidence structure
        :rtype: EvidenceStructure

        :Example:

            ContextEditor.subst_in_structure(structure, "v0", PInl(PVar("v1")))

        .. raises:: IncompatiblePattern
        """
        context = structure.context
        declared_type = context.type_of(name)
        if declared_type is None:
            raise IncompatiblePattern("%s is not a declared evidence variable" % name)
        spliced = cls.leaf_declarations(pattern, declared_type, context)

        entries = list()
        for entry in context.entries:
            if isinstance(entry, HypDecl) and entry.name == name:
                entries.extend(spliced)
            elif isinstance(entry, ConstConstraint):
                entries.append(ConstConstraint(entry.name, entry.body.replace(name, pattern)))
            elif isinstance(entry, ApConstraint):
                entries.append(ApConstraint(entry.fun, entry.domain, entry.body.replace(name, pattern)))
            else:
                entries.append(entry)

        evidence = TermAnalyser.subst_term(structure.evidence, name, pattern.to_term())
        logger.debug("[ContextEditor] %s := %s" % (name, pattern))
        return EvidenceStructure(context.replace_entries(entries), structure.goal, evidence)

    @classmethod
    def leaf_declarations(cls, pattern, formula, context):
        """
        The declarations introduced by the leaves of <pattern> read at type <formula>

        :return: DomainDecl and HypDecl entries, left to right
        :rtype: list

        .. raises:: IncompatiblePattern
        """
        if isinstance(pattern, PVar):
            if pattern.type is not None and not FormulaTools.alpha_equal(pattern.type, formula):
                raise IncompatiblePattern("%s is annotated %s, expected %s" % (pattern.name, pattern.type, formula))
            if context.declares(pattern.name):
                if not FormulaTools.alpha_equal(context.type_of(pattern.name), formula):
                    raise IncompatiblePattern("%s is declared at another type than %s" % (pattern.name, formula))
                return []
            return [HypDecl(pattern.name, formula)]
        if isinstance(pattern, PPair) and isinstance(formula, And):
            return cls.leaf_declarations(pattern.left, formula.left, context) \
                + cls.leaf_declarations(pattern.right, formula.right, context)
        if isinstance(pattern, PPair) and isinstance(formula, Ex) and isinstance(pattern.left, PDomain):
            witness = pattern.left.name
            declarations = [] if context.declares_domain(witness) else [DomainDecl(witness)]
            return declarations + cls.leaf_declarations(pattern.right, FormulaTools.instance(formula, witness),
                                                        context)
        if isinstance(pattern, PInl) and isinstance(formula, Or):
            return cls.leaf_declarations(pattern.pattern, formula.left, context)
        if isinstance(pattern, PInr) and isinstance(formula, Or):
            return cls.leaf_declarations(pattern.pattern, formula.right, context)
        raise IncompatiblePattern("pattern %s cannot inhabit %s" % (pattern, formula))
