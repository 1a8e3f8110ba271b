"""Runs the registered invariant checks"""
import logging
import time
from typing import Any, Dict, List, Optional

from app.main.config import SelftestConfig
from app.main.model.selftest import CheckKind, CheckResult, CheckSettings, SelftestReport
from app.main.service.selftest import CheckRegistry
from app.main.util.exceptions import KLCharacterError

logger = logging.getLogger(__name__)


def default_settings() -> CheckSettings:
    """Check defaults from the KLCHAR_SELFTEST_* environment"""
    return CheckSettings(
        depth=SelftestConfig.DEPTH,
        max_length=SelftestConfig.MAX_LENGTH,
        oracle_height=SelftestConfig.ORACLE_HEIGHT,
        types=list(SelftestConfig.TYPES) or ['A1~'],
    )


def run_check(kind: CheckKind, parameters: Dict[str, Any], cache_dir: Optional[str] = None,
              settings: Optional[CheckSettings] = None) -> CheckResult:
    check_class = CheckRegistry.get_check(kind)
    check = check_class(cache_dir, settings or default_settings())
    start = time.time()
    try:
        payload = check.execute(parameters)
    except KLCharacterError as e:
        logger.error(f"Check {kind.value} raised {e.code}: {e.message}")
        payload = {"passed": False, "cases": 0, "failures": [f"{e.code}: {e.message}"], "details": {}}
    elapsed = round(time.time() - start, 3)
    logger.info(f"Check {kind.value}: {'pass' if payload['passed'] else 'FAIL'} in {elapsed}s")
    return CheckResult(kind=kind, seconds=elapsed, **payload)


def run_selftest(kinds: Optional[List[CheckKind]] = None, parameters: Optional[Dict[str, Any]] = None,
                 cache_dir: Optional[str] = None, settings: Optional[CheckSettings] = None) -> SelftestReport:
    """Run the given checks (all registered ones by default)"""
    kinds = kinds or CheckRegistry.kinds()
    settings = settings or default_settings()
    results = [run_check(kind, parameters or {}, cache_dir, settings) for kind in kinds]
    return SelftestReport(passed=all(r.passed for r in results), results=results)
