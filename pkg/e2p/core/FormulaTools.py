import logging

from e2p.core.Models.Formula import Atom, FalseC, And, Or, Imp, All, Ex, Language
from e2p.core.Utils.Utils import Utils

logging.basicConfig()
logger = logging.getLogger("e2p")

BINARY = (And, Or, Imp)
QUANTIFIERS = (All, Ex)


class ArityMismatch(Exception):
    """
    A relation symbol is used with two different arities
    """
    pass


class NotClosedFormula(Exception):
    """
    The formula must not have free domain variables
    """
    pass


class NotMinimalFormula(Exception):
    """
    The formula uses False (or a negation) where a minimal logic formula is required
    """
    pass


class FormulaTools(object):
    """
    Structural operations on formulas: variables, substitution, alpha-equality and the A-translation.
    """

    @classmethod
    def free_domain_vars(cls, formula):
        """
        Return the free domain variables of a formula

        :param formula: the formula
        :type formula: Formula
        :return: the set of free variable names
        :rtype: frozenset
        """
        if isinstance(formula, Atom):
            return frozenset(formula.args)
        if isinstance(formula, FalseC):
            return frozenset()
        if isinstance(formula, BINARY):
            return cls.free_domain_vars(formula.left) | cls.free_domain_vars(formula.right)
        return cls.free_domain_vars(formula.body) - {formula.var}

    @classmethod
    def all_names(cls, formula):
        """
        Every variable name appearing in the formula, bound or free
        """
        if isinstance(formula, Atom):
            return set(formula.args)
        if isinstance(formula, FalseC):
            return set()
        if isinstance(formula, BINARY):
            return cls.all_names(formula.left) | cls.all_names(formula.right)
        return cls.all_names(formula.body) | {formula.var}

    @classmethod
    def is_closed(cls, formula):
        return not cls.free_domain_vars(formula)

    @classmethod
    def subst_domain_var(cls, formula, x, d):
        """
        Capture avoiding substitution of the domain variable <d> for the free occurrences of <x>

        :param formula: the formula to substitute in
        :param x: the variable to replace
        :param d: the replacing variable
        :return: the new formula
        :rtype: Formula

        :Example:

            FormulaTools.subst_domain_var(Ex("y", Atom("R", ("x", "y"))), "x", "d1")  # ex y. R(d1, y)
        """
        if x == d:
            return formula
        if isinstance(formula, Atom):
            if x not in formula.args:
                return formula
            return Atom(formula.name, tuple(d if arg == x else arg for arg in formula.args))
        if isinstance(formula, FalseC):
            return formula
        if isinstance(formula, BINARY):
            return type(formula)(cls.subst_domain_var(formula.left, x, d),
                                 cls.subst_domain_var(formula.right, x, d))
        # quantifier
        if formula.var == x or x not in cls.free_domain_vars(formula.body):
            return formula
        var, body = formula.var, formula.body
        if var == d:
            var = Utils.fresh_name(var, cls.all_names(body) | {x, d})
            body = cls.subst_domain_var(body, formula.var, var)
        return type(formula)(var, cls.subst_domain_var(body, x, d))

    @classmethod
    def instance(cls, quantified, d):
        """
        Body of a quantified formula with its bound variable replaced by <d>
        """
        return cls.subst_domain_var(quantified.body, quantified.var, d)

    @classmethod
    def alpha_equal(cls, left, right):
        """
        True when both formulas are equal up to the names of bound variables
        """
        return cls._alpha_equal(left, right, dict(), dict(), 0)

    @classmethod
    def _alpha_equal(cls, left, right, left_bound, right_bound, depth):
        if type(left) is not type(right):
            return False
        if isinstance(left, Atom):
            if left.name != right.name or len(left.args) != len(right.args):
                return False
            for left_arg, right_arg in zip(left.args, right.args):
                if left_bound.get(left_arg) != right_bound.get(right_arg):
                    return False
                if left_arg not in left_bound and left_arg != right_arg:
                    return False
            return True
        if isinstance(left, FalseC):
            return True
        if isinstance(left, BINARY):
            return cls._alpha_equal(left.left, right.left, left_bound, right_bound, depth) \
                and cls._alpha_equal(left.right, right.right, left_bound, right_bound, depth)
        new_left = dict(left_bound)
        new_left[left.var] = depth
        new_right = dict(right_bound)
        new_right[right.var] = depth
        return cls._alpha_equal(left.body, right.body, new_left, new_right, depth + 1)

    @classmethod
    def is_minimal(cls, formula):
        """
        A formula is minimal when it contains neither False nor a negation
        """
        if isinstance(formula, FalseC):
            return False
        if isinstance(formula, Atom):
            return True
        if isinstance(formula, BINARY):
            return cls.is_minimal(formula.left) and cls.is_minimal(formula.right)
        return cls.is_minimal(formula.body)

    @classmethod
    def language_of(cls, formula, language=None):
        """
        Collect the relation symbols of a formula with their arity

        :param formula: the formula to scan
        :param language: a Language to extend, a new one is created when None
        :return: the language
        :rtype: Language

        .. raises:: ArityMismatch
        """
        if language is None:
            language = Language()
        if isinstance(formula, Atom):
            known = language.arity(formula.name)
            if known is None:
                language.relations[formula.name] = len(formula.args)
            elif known != len(formula.args):
                raise ArityMismatch("relation %s used with arity %d and %d"
                                    % (formula.name, known, len(formula.args)))
        elif isinstance(formula, BINARY):
            cls.language_of(formula.left, language)
            cls.language_of(formula.right, language)
        elif isinstance(formula, QUANTIFIERS):
            cls.language_of(formula.body, language)
        return language

    @classmethod
    def size(cls, formula):
        if isinstance(formula, (Atom, FalseC)):
            return 1
        if isinstance(formula, BINARY):
            return 1 + cls.size(formula.left) + cls.size(formula.right)
        return 1 + cls.size(formula.body)

    @classmethod
    def a_translate(cls, formula, a):
        """
        Friedman A-translation: every atom P becomes P \\/ A, False becomes A, the rest is left in place.

        :param formula: the formula to translate
        :type formula: Formula
        :param a: the formula A, must be closed
        :type a: Formula
        :return: the translated formula
        :rtype: Formula

        :Example:

            FormulaTools.a_translate(Imp(FalseC(), Atom("P")), Atom("bot"))  # bot => P \\/ bot

        .. raises:: NotClosedFormula
        """
        if not cls.is_closed(a):
            raise NotClosedFormula("A-translation formula %s has free variables" % a)
        return cls._translate(formula, a)

    @classmethod
    def _translate(cls, formula, a):
        if isinstance(formula, Atom):
            return Or(formula, a)
        if isinstance(formula, FalseC):
            return a
        if isinstance(formula, BINARY):
            return type(formula)(cls._translate(formula.left, a), cls._translate(formula.right, a))
        return type(formula)(formula.var, cls._translate(formula.body, a))

    @classmethod
    def instantiate_atom(cls, formula, name, replacement):
        """
        Replace every occurrence of the nullary atom <name> by <replacement>
        """
        if isinstance(formula, Atom):
            if formula.name == name and not formula.args:
                return replacement
            return formula
        if isinstance(formula, FalseC):
            return formula
        if isinstance(formula, BINARY):
            return type(formula)(cls.instantiate_atom(formula.left, name, replacement),
                                 cls.instantiate_atom(formula.right, name, replacement))
        return type(formula)(formula.var, cls.instantiate_atom(formula.body, name, replacement))

    @classmethod
    def fresh_atom_name(cls, formula, base):
        """
        A nullary relation name not used in <formula>, <base> when possible
        """
        language = cls.language_of(formula)
        return Utils.fresh_name(base, set(language.relations))
