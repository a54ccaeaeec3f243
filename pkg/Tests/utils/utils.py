import os
import unittest

import mock

from e2p.core.Models.EvidenceTerm import Var, Pair, Inl, Inr, Lam, Ap, Spread, Decide, CbvAp, CbvPair
from e2p.core.Models.Pattern import PVar, PPair, PInl, PInr


def get_test_path(file_path):
    """
    return the path of a file with "Tests" depending of the current location of the execution
    :return: string path
    """
    current_path = os.getcwd()
    if "/Tests" in current_path:
        return current_path + os.sep + file_path
    else:
        return current_path + os.sep + "Tests" + os.sep + file_path


def read_test_file(file_path):
    """
    return the content of a file under Tests/
    """
    with open(get_test_path(file_path), "r") as f:
        return f.read()


NAMES = ["v", "w", "a", "b"]


def random_term(generator, depth, bound=(), normal=False):
    """
    A random evidence term over the free variables v and w. With <normal> every destructor and
    application is blocked on a variable, so the term has no redex.
    """
    names = ["v", "w"] + list(bound)
    if depth == 0 or generator.random() < 0.15:
        return Var(generator.choice(names))
    shapes = [Pair, Inl, Inr, Lam, Ap, Spread, Decide]
    if not normal:
        shapes += [CbvAp, CbvPair]
    shape = generator.choice(shapes)

    def sub(extra=()):
        return random_term(generator, depth - 1, bound + tuple(extra), normal)

    def scrut():
        return Var(generator.choice(names)) if normal else sub()

    if shape in (Inl, Inr):
        return shape(sub())
    if shape is Lam:
        x = generator.choice(NAMES)
        return Lam(x, sub([x]))
    if shape is Spread:
        x, y = generator.sample(NAMES, 2)
        return Spread(scrut(), x, y, sub([x, y]))
    if shape is Decide:
        x, y = generator.choice(NAMES), generator.choice(NAMES)
        return Decide(scrut(), x, sub([x]), y, sub([y]))
    if shape is Ap:
        return Ap(scrut(), sub())
    return shape(sub(), sub())


def random_pattern(generator, depth, leaves):
    if depth == 0 or generator.random() < 0.3:
        name = "u%d" % len(leaves)
        leaves.append(name)
        return PVar(name)
    shape = generator.choice([PPair, PInl, PInr])
    if shape is PPair:
        return PPair(random_pattern(generator, depth - 1, leaves), random_pattern(generator, depth - 1, leaves))
    return shape(random_pattern(generator, depth - 1, leaves))


class TestTestUtils(unittest.TestCase):

    def test_get_test_path(self):
        # Tests is in path
        with mock.patch('Tests.utils.utils.os.getcwd', return_value='/home/user/Documents/e2p/Tests'):
            expected = "/home/user/Documents/e2p/Tests/file"
            self.assertEqual(expected, get_test_path("file"))

        # Tests not in path
        with mock.patch('Tests.utils.utils.os.getcwd', return_value='/home/user/Documents/e2p'):
            expected = "/home/user/Documents/e2p/Tests/file"
            self.assertEqual(expected, get_test_path("file"))
