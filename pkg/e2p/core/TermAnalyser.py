import logging

from e2p.core.Models.EvidenceTerm import Var, Pair, Inl, Inr, Lam, Ap, Spread, Decide, CbvAp, CbvPair, Stuck, \
    Const, CANONICAL, PRINCIPAL_FIELD
from e2p.core.Models.HoleContext import HoleContext
from e2p.core.Models.Measure import Measure
from e2p.core.Utils.Utils import Utils

logging.basicConfig()
logger = logging.getLogger("e2p")

LEAVES = (Var, Stuck, Const)


class TermAnalyser(object):
    """
    Syntactic operations on evidence terms: variables, substitution, alpha-equality,
    principal subterm and the termination measure.
    """

    ##################
    #
    # Variables
    #
    #########
    @classmethod
    def free_vars(cls, term):
        """
        Return the free variables of an evidence term

        :param term: the term
        :type term: EvidenceTerm
        :return: the free variable names
        :rtype: frozenset

        :Example:

            TermAnalyser.free_vars(Spread(Var("p"), "x", "y", Var("x")))  # frozenset({"p"})
        """
        if isinstance(term, Var):
            return frozenset([term.name])
        if isinstance(term, (Stuck, Const)):
            return frozenset()
        if isinstance(term, (Inl, Inr)):
            return cls.free_vars(term.term)
        if isinstance(term, Lam):
            return cls.free_vars(term.body) - {term.var}
        if isinstance(term, Pair):
            return cls.free_vars(term.left) | cls.free_vars(term.right)
        if isinstance(term, (Ap, CbvAp)):
            return cls.free_vars(term.fun) | cls.free_vars(term.arg)
        if isinstance(term, CbvPair):
            return cls.free_vars(term.first) | cls.free_vars(term.second)
        if isinstance(term, Spread):
            return cls.free_vars(term.scrut) | (cls.free_vars(term.body) - {term.x, term.y})
        if isinstance(term, Decide):
            return cls.free_vars(term.scrut) | (cls.free_vars(term.left) - {term.x}) \
                | (cls.free_vars(term.right) - {term.y})
        raise TypeError("not an evidence term: %r" % (term,))

    @classmethod
    def all_names(cls, term):
        """
        Every variable name of the term, bound or free
        """
        names = set()
        for node in cls.nodes(term):
            if isinstance(node, Var):
                names.add(node.name)
            elif isinstance(node, Lam):
                names.add(node.var)
            elif isinstance(node, (Spread, Decide)):
                names.update((node.x, node.y))
        return names

    @classmethod
    def nodes(cls, term):
        """
        Iterate over every node of the term, root first
        """
        stack = [term]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(cls.children(node)))

    @staticmethod
    def children(term):
        if isinstance(term, LEAVES):
            return ()
        if isinstance(term, (Inl, Inr)):
            return (term.term,)
        if isinstance(term, Lam):
            return (term.body,)
        if isinstance(term, Pair):
            return term.left, term.right
        if isinstance(term, (Ap, CbvAp)):
            return term.fun, term.arg
        if isinstance(term, CbvPair):
            return term.first, term.second
        if isinstance(term, Spread):
            return term.scrut, term.body
        if isinstance(term, Decide):
            return term.scrut, term.left, term.right
        raise TypeError("not an evidence term: %r" % (term,))

    ##################
    #
    # Substitution
    #
    #########
    @classmethod
    def subst_term(cls, term, v, e):
        """
        Capture avoiding substitution of <e> for the free occurrences of <v> in <term>

        :param term: the term to substitute in
        :param v: the variable name
        :param e: the replacing term
        :return: the new term
        :rtype: EvidenceTerm
        """
        return cls.subst_many(term, {v: e})

    @classmethod
    def subst_many(cls, term, mapping):
        """
        Simultaneous capture avoiding substitution, <mapping> maps variable names to terms
        """
        if not mapping:
            return term
        if isinstance(term, Var):
            return mapping.get(term.name, term)
        if isinstance(term, (Stuck, Const)):
            return term
        if isinstance(term, Inl):
            return Inl(cls.subst_many(term.term, mapping))
        if isinstance(term, Inr):
            return Inr(cls.subst_many(term.term, mapping))
        if isinstance(term, Pair):
            return Pair(cls.subst_many(term.left, mapping), cls.subst_many(term.right, mapping))
        if isinstance(term, Ap):
            return Ap(cls.subst_many(term.fun, mapping), cls.subst_many(term.arg, mapping))
        if isinstance(term, CbvAp):
            return CbvAp(cls.subst_many(term.fun, mapping), cls.subst_many(term.arg, mapping))
        if isinstance(term, CbvPair):
            return CbvPair(cls.subst_many(term.first, mapping), cls.subst_many(term.second, mapping))
        if isinstance(term, Lam):
            (var,), body, inner = cls._enter_binders((term.var,), term.body, mapping)
            return Lam(var, cls.subst_many(body, inner))
        if isinstance(term, Spread):
            (x, y), body, inner = cls._enter_binders((term.x, term.y), term.body, mapping)
            return Spread(cls.subst_many(term.scrut, mapping), x, y, cls.subst_many(body, inner))
        if isinstance(term, Decide):
            (x,), left, inner_left = cls._enter_binders((term.x,), term.left, mapping)
            (y,), right, inner_right = cls._enter_binders((term.y,), term.right, mapping)
            return Decide(cls.subst_many(term.scrut, mapping),
                          x, cls.subst_many(left, inner_left),
                          y, cls.subst_many(right, inner_right))
        raise TypeError("not an evidence term: %r" % (term,))

    @classmethod
    def _enter_binders(cls, binders, body, mapping):
        """
        Prepare a substitution under <binders>: drop shadowed and useless entries, then rename
        the binders that would capture a free variable of an incoming term.
        """
        body_free = cls.free_vars(body)
        inner = {name: value for name, value in mapping.items() if name not in binders and name in body_free}
        if not inner:
            return binders, body, inner
        incoming = set()
        for value in inner.values():
            incoming |= cls.free_vars(value)
        if not incoming.intersection(binders):
            return binders, body, inner
        avoid = incoming | cls.all_names(body) | set(inner) | set(binders)
        renaming = dict()
        new_binders = list()
        for binder in binders:
            if binder in incoming:
                new_name = Utils.fresh_name(binder, avoid)
                avoid.add(new_name)
                renaming[binder] = Var(new_name)
                new_binders.append(new_name)
            else:
                new_binders.append(binder)
        logger.debug("[TermAnalyser] rename binders %s to %s" % (list(binders), new_binders))
        return tuple(new_binders), cls.subst_many(body, renaming), inner

    ##################
    #
    # Alpha-equality
    #
    #########
    @classmethod
    def alpha_equal(cls, left, right):
        """
        True when both terms are equal up to the names of bound variables
        """
        return cls._alpha_equal(left, right, dict(), dict(), 0)

    @classmethod
    def _alpha_equal(cls, left, right, left_bound, right_bound, depth):
        if type(left) is not type(right):
            return False
        if isinstance(left, Var):
            if left_bound.get(left.name) != right_bound.get(right.name):
                return False
            return left.name in left_bound or left.name == right.name
        if isinstance(left, Stuck):
            return True
        if isinstance(left, Const):
            return left.value == right.value
        if isinstance(left, Lam):
            return cls._alpha_equal(left.body, right.body,
                                    dict(left_bound, **{left.var: depth}),
                                    dict(right_bound, **{right.var: depth}), depth + 1)
        if isinstance(left, Spread):
            if not cls._alpha_equal(left.scrut, right.scrut, left_bound, right_bound, depth):
                return False
            inner_left = dict(left_bound, **{left.x: depth})
            inner_left[left.y] = depth + 1
            inner_right = dict(right_bound, **{right.x: depth})
            inner_right[right.y] = depth + 1
            return cls._alpha_equal(left.body, right.body, inner_left, inner_right, depth + 2)
        if isinstance(left, Decide):
            return cls._alpha_equal(left.scrut, right.scrut, left_bound, right_bound, depth) \
                and cls._alpha_equal(left.left, right.left,
                                     dict(left_bound, **{left.x: depth}),
                                     dict(right_bound, **{right.x: depth}), depth + 1) \
                and cls._alpha_equal(left.right, right.right,
                                     dict(left_bound, **{left.y: depth}),
                                     dict(right_bound, **{right.y: depth}), depth + 1)
        return all(cls._alpha_equal(a, b, left_bound, right_bound, depth)
                   for a, b in zip(cls.children(left), cls.children(right)))

    ##################
    #
    # Principal subterm
    #
    #########
    @staticmethod
    def principal_subterm(term):
        """
        Follow the principal positions down from the root.

        :param term: the term to analyse
        :type term: EvidenceTerm
        :return: the principal subterm and the one hole context around it
        :rtype: tuple(EvidenceTerm, HoleContext)

        :Example:

            TermAnalyser.principal_subterm(Ap(Var("f"), Var("t")))  # (Var("f"), HoleContext(...))
        """
        frames = list()
        node = term
        while type(node) in PRINCIPAL_FIELD:
            field = PRINCIPAL_FIELD[type(node)]
            frames.append((node, field))
            node = getattr(node, field)
        return node, HoleContext(frames)

    @classmethod
    def principal_redex(cls, term):
        """
        The operator node directly above the principal subterm, with the context around that node.
        When the term is its own principal subterm the term itself is returned with an empty context.
        """
        principal, context = cls.principal_subterm(term)
        if not context.frames:
            return principal, context
        redex, _ = context.frames[-1]
        return redex, HoleContext(context.frames[:-1])

    ##################
    #
    # Shape
    #
    #########
    @staticmethod
    def is_canonical(term):
        return isinstance(term, CANONICAL)

    @staticmethod
    def head_name(term):
        return type(term).__name__

    @classmethod
    def size(cls, term):
        return sum(1 for _ in cls.nodes(term))

    @classmethod
    def measure(cls, term):
        """
        Count the operators of the termination measure

        :param term: the term
        :return: the measure <nc, cbv, npr, cn, size>
        :rtype: Measure
        """
        nc = cbv = npr = cn = size = 0
        for node in cls.nodes(term):
            size += 1
            if isinstance(node, (Decide, Spread, Ap)):
                nc += 1
            elif isinstance(node, CbvAp):
                cbv += 1
            elif isinstance(node, Pair):
                npr += 1
            elif isinstance(node, (CbvPair, Inl, Inr)):
                cn += 1
        return Measure(nc=nc, cbv=cbv, npr=npr, cn=cn, size=size)
