from typing import Any, Dict, List, Optional


class ResultBuilder:
    """Utilities for building standardized check results"""

    @staticmethod
    def build_result(
        cases: int,
        failures: List[str],
        details: Optional[Dict[str, Any]] = None
    ) -> Dict[str, Any]:
        """
        Create the payload returned by InvariantCheck.execute.

        Args:
            cases: Number of individual assertions evaluated
            failures: One message per failed assertion
            details: Extra values worth reporting

        Returns:
            Dict with passed, cases, failures and details
        """
        return {
            "passed": not failures,
            "cases": cases,
            "failures": list(failures),
            "details": details or {},
        }

    @staticmethod
    def build_summary(results: List[Dict[str, Any]]) -> Dict[str, Any]:
        failed = [r["kind"] for r in results if not r["passed"]]
        return {
            "checks": len(results),
            "failed": failed,
            "cases": sum(r.get("cases", 0) for r in results),
            "message": "all checks passed" if not failed else f"{len(failed)} check(s) failed",
        }


class CaseCounter:
    """Collects assertion outcomes for one check"""

    def __init__(self):
        self.cases = 0
        self.failures: List[str] = []

    def expect(self, condition: bool, message: str):
        self.cases += 1
        if not condition:
            self.failures.append(message)

    def result(self, details: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        return ResultBuilder.build_result(self.cases, self.failures, details)
