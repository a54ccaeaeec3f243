from .test_context import TestEvidenceContext, TestContextChecker, TestContextEditor
from .test_derive import TestRuleMatcher, TestProofSynthesizer
from .test_evaluator import TestEvaluator
from .test_file_manager import TestFileManager
from .test_formula import TestFormula
from .test_friedman import TestFriedmanTranslator
from .test_init import TestInit
from .test_parsers import TestFormulaParser, TestProofParser, TestStructureParser
from .test_proof import TestProofChecker, TestProofExtractor, TestProofTree
from .test_semantics import TestFormulaEvaluation, TestMembership, TestContextModel
from .test_settings_loader import TestSettingLoader
from .test_singleton import TestSingleton
from .test_term import TestTermParser, TestTermAnalyser
from .test_utils import TestUtils
from .test_yaml_loader import TestYAMLLoader
