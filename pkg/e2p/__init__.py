#!/usr/bin/env python
# coding: utf8
import argparse
import logging
import os
import sys

from e2p.core.ConfigurationManager import SettingLoader
from e2p.core.ConfigurationManager.SettingLoader import SettingNotFound, NullSettingException, \
    SettingInvalidException
from e2p.core.ConfigurationManager.YAMLLoader import YAMLFileNotFound, YAMLFileEmpty
from e2p.core.ContextChecker import ContextViolation
from e2p.core.Evaluator import Evaluator, FuelExhaustedError
from e2p.core.FormulaTools import FormulaTools, ArityMismatch, NotClosedFormula, NotMinimalFormula
from e2p.core.FriedmanTranslator import FriedmanTranslator
from e2p.core.Models.EvalOutcome import FuelExhausted
from e2p.core.Models.Formula import Atom, FalseC
from e2p.core.Models.ProofTree import ProofPrinter
from e2p.core.Models.settings.Options import Options
from e2p.core.Parsers.FormulaParser import FormulaParser, FormulaSyntaxError
from e2p.core.Parsers.ProofParser import ProofParser, ProofSyntaxError
from e2p.core.Parsers.StructureParser import StructureParser, StructureSyntaxError
from e2p.core.Parsers.TermParser import TermParser, TermSyntaxError
from e2p.core.ProofChecker import ProofChecker, ProofRejected, LOGICS, INTUITIONISTIC
from e2p.core.ProofExtractor import ProofExtractor
from e2p.core.ProofSynthesizer import prf_driver, InvariantViolation, NotClosedEvidence
from e2p.core.RuleMatcher import NoRuleMatches, StuckEvidence
from e2p.core.SemanticEvaluator import SemanticEvaluator, Membership, SampleOutcome, UnboundVariable
from e2p.core.Utils.FileManager import FileManager
from e2p.core.Utils.Utils import Utils
from ._version import version_str

logging.basicConfig()
logger = logging.getLogger("e2p")

# actions available, with the number of input files each one reads
ACTION_LIST = ["prove", "check", "extract", "translate", "eval", "normalize"]
ACTION_FILES = {
    "prove": ["formula file", "evidence file"],
    "check": ["proof file"],
    "extract": ["proof file"],
    "translate": ["formula file"],
    "eval": ["formula file"],
    "normalize": ["evidence file"]
}

EXIT_SUCCESS = 0
EXIT_USAGE = 1
EXIT_REJECTED = 2
EXIT_INCONCLUSIVE = 3

FUEL_VARIABLE = "E2P_FUEL"

INPUT_ERRORS = (IOError, OSError, FormulaSyntaxError, TermSyntaxError, ProofSyntaxError, StructureSyntaxError,
                ArityMismatch, NotClosedFormula, NotMinimalFormula, NotClosedEvidence, UnboundVariable)
REJECTIONS = (NoRuleMatches, StuckEvidence, ProofRejected, InvariantViolation, ContextViolation)


class InvalidInvocation(Exception):
    """
    The command line flags are not usable
    """
    pass


def parse_args(args):
    """
    Parsing function
    :param args: arguments passed from the command line
    :return: return parser
    """
    parser = argparse.ArgumentParser(description='e2p: formal proofs from evidence terms')
    parser.add_argument("action", help="[%s]" % "|".join(ACTION_LIST))
    parser.add_argument("files", nargs="*", help="input files of the action")
    parser.add_argument("--fuel", type=int,
                        help="Maximum number of computation steps and rule applications")
    parser.add_argument("--logic", choices=LOGICS, help="Logic of the proof")
    parser.add_argument("--pre-normalize", action='store_true', default=None,
                        help="Normalize every derived evidence and check that its measure decreases")
    parser.add_argument("--check-invariants", action='store_true', default=None,
                        help="Stop on an ill formed context or a measure that does not decrease")
    parser.add_argument("--out", help="Write the result into this file instead of the standard output")
    parser.add_argument("--trace", action='store_true', help="Print every derivation step")
    parser.add_argument("--atom", help="Atom used by translate, a nullary atom name or False")
    parser.add_argument("--evidence", help="Evidence file checked by eval")
    parser.add_argument("--structure", help="Structure checked by eval, e.g. \"domain=2; P=1; R(0,1)=0\"")
    parser.add_argument("--kmax", type=int, help="Largest domain size enumerated by eval")
    parser.add_argument("--atomcard", type=int, help="Largest atom cardinality enumerated by eval")
    parser.add_argument("--samples", type=int, help="Check this number of random structures instead of all")
    parser.add_argument("--seed", type=int, help="Seed of the random structures")
    parser.add_argument("--settings-file", help="Full path of a settings file")
    parser.add_argument("--debug", action='store_true',
                        help="Show debug output")
    parser.add_argument('-v', '--version', action='version',
                        version='e2p ' + version_str)

    # parse arguments from script parameters
    return parser.parse_args(args)


def main():
    """Entry point of e2p program."""
    # parse argument. the script name is removed
    try:
        parser = parse_args(sys.argv[1:])
    except SystemExit as e:
        sys.exit(EXIT_SUCCESS if e.code == 0 else EXIT_USAGE)

    # check if we want debug
    configure_logging(debug=parser.debug)

    logger.debug("e2p args: %s" % parser)

    # check the user provide a valid action
    if parser.action not in ACTION_LIST:
        Utils.print_warning("%s is not a recognised action\n" % parser.action)
        sys.exit(EXIT_USAGE)

    expected = ACTION_FILES[parser.action]
    if len(parser.files) != len(expected):
        Utils.print_danger("%s expects: %s" % (parser.action, ", ".join(expected)))
        sys.exit(EXIT_USAGE)

    try:
        settings = SettingLoader(file_path=parser.settings_file).settings
        options = resolve_options(parser, settings.options)
    except (SettingNotFound, NullSettingException, SettingInvalidException, YAMLFileNotFound, YAMLFileEmpty,
            InvalidInvocation) as e:
        Utils.print_danger(str(e))
        sys.exit(EXIT_USAGE)

    sys.exit(run_action(parser, options, settings.trace))


def resolve_options(parser, defaults):
    """
    Merge the command line flags into the settings options.
    Command line flags win, then the E2P_FUEL environment variable for the fuel, then the settings.

    :param parser: the parsed arguments
    :param defaults: the options read from the settings file
    :type defaults: Options
    :return: the options of this run
    :rtype: Options

    .. raises:: InvalidInvocation
    """
    values = defaults.values()

    fuel_variable = os.environ.get(FUEL_VARIABLE)
    if fuel_variable is not None:
        try:
            values["fuel"] = int(fuel_variable)
        except ValueError:
            raise InvalidInvocation("%s must be an integer, got %s" % (FUEL_VARIABLE, fuel_variable))

    for key in ("fuel", "kmax", "atomcard", "seed", "logic", "pre_normalize", "check_invariants"):
        if getattr(parser, key) is not None:
            values[key] = getattr(parser, key)

    for key in ("fuel", "kmax", "atomcard"):
        if values[key] < 1:
            raise InvalidInvocation("%s must be a positive integer, got %d" % (key, values[key]))
    if parser.samples is not None and parser.samples < 1:
        raise InvalidInvocation("samples must be a positive integer, got %d" % parser.samples)
    if parser.out is not None and not FileManager.is_path_exists_or_creatable(parser.out):
        raise InvalidInvocation("cannot write into %s" % parser.out)
    if parser.atom is not None and parser.atom != "False" and not parser.atom.isidentifier():
        raise InvalidInvocation("--atom takes a nullary atom name or False, got %s" % parser.atom)

    options = Options(**values)
    logger.debug("[e2p] options: %s" % options)
    return options


def run_action(parser, options, trace):
    """
    Run the action and map its failures to exit codes:
    1 unreadable input, 2 rejected evidence or proof, 3 fuel exhausted

    :return: the exit code
    :rtype: int
    """
    action = ACTIONS[parser.action]
    try:
        return action(parser, options, trace)
    except INPUT_ERRORS as e:
        Utils.print_danger(str(e))
        return EXIT_USAGE
    except REJECTIONS as e:
        Utils.print_danger("%s: %s" % (type(e).__name__, e))
        return EXIT_REJECTED
    except FuelExhaustedError as e:
        Utils.print_danger("fuel exhausted: %s" % e)
        return EXIT_INCONCLUSIVE


def write_output(parser, text):
    """
    Write a result to the --out file or to the standard output
    """
    if parser.out is not None:
        if not FileManager.write_in_file(parser.out, text):
            raise IOError("cannot write into %s" % parser.out)
        Utils.print_success("written to %s" % parser.out)
    else:
        Utils.print_plain(text.rstrip("\n"))


def cmd_prove(parser, options, trace):
    goal = FormulaParser.parse(Utils.read_text_file(parser.files[0]))
    evidence = TermParser.parse(Utils.read_text_file(parser.files[1]))

    listener = None
    if parser.trace:
        def listener(n, step):
            Utils.print_trace(trace.render(n, step))

    driver_options = dict(fuel=options.fuel, pre_normalize=options.pre_normalize,
                          check_invariants=options.check_invariants, listener=listener)
    if options.logic == INTUITIONISTIC:
        placeholder = FriedmanTranslator.placeholder_atom(goal, options.placeholder_atom)
        translated = FriedmanTranslator.translate(goal, placeholder)
        logger.debug("[e2p] proving the translation %s" % translated)
        ml_proof = prf_driver(translated, evidence, **driver_options)
        tree = FriedmanTranslator.il_proof_from_translation(goal, ml_proof, placeholder.name)
        write_output(parser, ProofPrinter.print_proof(tree, goal, INTUITIONISTIC))
    else:
        tree = prf_driver(goal, evidence, **driver_options)
        write_output(parser, ProofPrinter.print_proof(tree, goal))
    Utils.print_success("proof of %s with %d nodes" % (goal, tree.size()))
    return EXIT_SUCCESS


def _checked_proof_file(parser, options):
    proof_file = ProofParser.parse(Utils.read_text_file(parser.files[0]))
    logic = parser.logic or proof_file.logic or options.logic
    ProofChecker.check_proof(proof_file.goal, proof_file.tree, logic)
    return proof_file, logic


def cmd_check(parser, options, trace):
    proof_file, logic = _checked_proof_file(parser, options)
    Utils.print_success("%s proof of %s accepted" % (logic, proof_file.goal))
    return EXIT_SUCCESS


def cmd_extract(parser, options, trace):
    proof_file, logic = _checked_proof_file(parser, options)
    term = ProofExtractor.extract(proof_file.tree)
    write_output(parser, str(term))
    return EXIT_SUCCESS


def cmd_translate(parser, options, trace):
    goal = FormulaParser.parse(Utils.read_text_file(parser.files[0]))
    name = parser.atom if parser.atom is not None else options.placeholder_atom
    atom = FalseC() if name == "False" else Atom(name)
    write_output(parser, str(FriedmanTranslator.translate(goal, atom)))
    return EXIT_SUCCESS


def cmd_eval(parser, options, trace):
    goal = FormulaParser.parse(Utils.read_text_file(parser.files[0]))
    if not FormulaTools.is_closed(goal):
        raise NotClosedFormula("%s has free variables" % goal)

    if parser.evidence is None:
        if parser.structure is None:
            raise IOError("eval needs --evidence, or --structure to count the values of the formula")
        structure = StructureParser.parse(parser.structure)
        write_output(parser, str(SemanticEvaluator.cardinality(structure, goal)))
        return EXIT_SUCCESS

    evidence = TermParser.parse(Utils.read_text_file(parser.evidence))
    if parser.structure is not None:
        structure = StructureParser.parse(parser.structure)
        membership = SemanticEvaluator.check_membership(structure, evidence, goal, options.fuel)
        if membership is Membership.NOT_MEMBER:
            Utils.print_danger("counterexample: %s" % structure)
            return EXIT_REJECTED
        if membership is Membership.INCONCLUSIVE:
            Utils.print_warning("inconclusive in %s after %d steps" % (structure, options.fuel))
            return EXIT_INCONCLUSIVE
        write_output(parser, str(membership))
        return EXIT_SUCCESS

    structures = None
    if parser.samples is not None:
        structures = SemanticEvaluator.random_structures(goal, options.kmax, options.atomcard, parser.samples,
                                                         options.seed)
    result = SemanticEvaluator.check_uniform_validity_sample(goal, evidence, options.kmax, options.atomcard,
                                                             options.fuel, structures=structures)
    if result.outcome is SampleOutcome.COUNTEREXAMPLE:
        Utils.print_danger("counterexample: %s" % result.structure)
        return EXIT_REJECTED
    if result.outcome is SampleOutcome.INCONCLUSIVE:
        Utils.print_warning("inconclusive after %d structures" % result.checked)
        return EXIT_INCONCLUSIVE
    Utils.print_info("%d structures checked" % result.checked)
    write_output(parser, str(result.outcome))
    return EXIT_SUCCESS


def cmd_normalize(parser, options, trace):
    term = TermParser.parse(Utils.read_text_file(parser.files[0]))
    normal = Evaluator.normalize(term, options.fuel)
    if isinstance(normal, FuelExhausted):
        raise FuelExhaustedError("no normal form within %d steps" % normal.steps_used)
    write_output(parser, str(normal))
    return EXIT_SUCCESS


ACTIONS = {
    "prove": cmd_prove,
    "check": cmd_check,
    "extract": cmd_extract,
    "translate": cmd_translate,
    "eval": cmd_eval,
    "normalize": cmd_normalize
}


class AppFilter(logging.Filter):
    """
    Class used to add a custom entry into the logger
    """

    def filter(self, record):
        record.app_version = "e2p-%s" % version_str
        return True


def configure_logging(debug=None):
    """
    Send the e2p logger to the standard error.

    :param debug: If true, set the log level to debug
    """
    logger = logging.getLogger("e2p")
    logger.addFilter(AppFilter())
    logger.propagate = False
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    syslog = logging.StreamHandler()
    syslog.setLevel(logging.DEBUG)

    formatter = logging.Formatter('%(asctime)s :: %(app_version)s :: %(message)s', "%Y-%m-%d %H:%M:%S")
    syslog.setFormatter(formatter)

    if debug:
        logger.setLevel(logging.DEBUG)
    else:
        logger.setLevel(logging.INFO)

    # add the handlers to logger
    logger.addHandler(syslog)

    logger.debug("Logger ready")
