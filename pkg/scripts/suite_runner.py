#!/usr/bin/env python3
"""
Test runner for the verifier's test modules
Runs every test_* function in scripts/test_*.py without needing a pytest invocation
"""

import argparse
import importlib.util
import inspect
import logging
import sys
import tempfile
import traceback
from pathlib import Path
from types import ModuleType
from typing import Callable, List

# Add the parent directory to Python path
sys.path.insert(0, str(Path(__file__).parent.parent))

logger = logging.getLogger(__name__)

SCRIPTS_DIR = Path(__file__).parent


class PropertyTestSuite:
    """Collects test functions from the test modules and records their outcomes"""

    def __init__(self):
        self.tests_passed = 0
        self.tests_failed = 0
        self.test_results = []

    def load_module(self, path: Path) -> ModuleType:
        spec = importlib.util.spec_from_file_location(path.stem, path)
        module = importlib.util.module_from_spec(spec)
        spec.loader.exec_module(module)
        return module

    def run_function(self, module: ModuleType, name: str, function: Callable):
        """Run one test, supplying a tmp_path when it asks for one"""
        try:
            if "tmp_path" in inspect.signature(function).parameters:
                with tempfile.TemporaryDirectory() as tmp:
                    function(tmp_path=Path(tmp))
            else:
                function()
            self.record_test(f"{module.__name__}::{name}", True)
        except Exception as e:
            logger.debug(traceback.format_exc())
            self.record_test(f"{module.__name__}::{name}", False, f"{type(e).__name__}: {e}")

    def run_all_tests(self, patterns: List[str]):
        logger.info("Starting verifier test suite")
        logger.info("=" * 50)
        for path in sorted(SCRIPTS_DIR.glob("test_*.py")):
            if patterns and not any(p in path.stem for p in patterns):
                continue
            module = self.load_module(path)
            for name, function in inspect.getmembers(module, inspect.isfunction):
                if name.startswith("test_") and function.__module__ == module.__name__:
                    self.run_function(module, name, function)
        self.print_test_results()

    def record_test(self, test_name: str, passed: bool, details: str = ""):
        """Record test result"""
        if passed:
            self.tests_passed += 1
            status = "PASS"
        else:
            self.tests_failed += 1
            status = "FAIL"
        self.test_results.append({"name": test_name, "status": status, "details": details})
        logger.info(f"{status} {test_name} {details}".rstrip())

    def print_test_results(self):
        """Print final test results"""
        logger.info("=" * 60)
        for result in self.test_results:
            if result["status"] == "FAIL":
                logger.info(f"FAIL {result['name']}")
                logger.info(f"    {result['details']}")
        logger.info("-" * 60)
        logger.info(f"Tests Passed: {self.tests_passed}")
        logger.info(f"Tests Failed: {self.tests_failed}")
        logger.info(f"Total Tests: {self.tests_passed + self.tests_failed}")
        logger.info("=" * 60)


def main():
    parser = argparse.ArgumentParser(description="Run the verifier tests")
    parser.add_argument("modules", nargs="*", help="Only modules whose name contains one of these")
    parser.add_argument("--log-level", default="INFO", help="Log level")
    args = parser.parse_args()

    logging.basicConfig(level=getattr(logging, args.log_level), format="%(message)s")

    test_suite = PropertyTestSuite()
    test_suite.run_all_tests(args.modules)
    if test_suite.tests_failed > 0:
        sys.exit(1)


if __name__ == "__main__":
    main()
