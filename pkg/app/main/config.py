import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


def _int_env(key: str, default: int) -> int:
    value = os.environ.get(key)
    return int(value) if value else default


class Config:
    DEFAULT_DEPTH = _int_env('KLCHAR_DEFAULT_DEPTH', 4)
    MAX_DEPTH = _int_env('KLCHAR_MAX_DEPTH', 12)
    HEIGHT_CAP = _int_env('KLCHAR_HEIGHT_CAP', 512)
    ORBIT_CAP = _int_env('KLCHAR_ORBIT_CAP', 20000)
    CACHE_DIR = os.environ.get('KLCHAR_CACHE_DIR')
    CARTAN_FILE = os.environ.get('KLCHAR_CARTAN_FILE')
    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'WARNING')


class OracleConfig:
    MAX_HEIGHT = _int_env('KLCHAR_ORACLE_MAX_HEIGHT', 4)


class SelftestConfig:
    DEPTH = _int_env('KLCHAR_SELFTEST_DEPTH', Config.DEFAULT_DEPTH)
    MAX_LENGTH = _int_env('KLCHAR_SELFTEST_MAX_LENGTH', 5)
    ORACLE_HEIGHT = _int_env('KLCHAR_SELFTEST_ORACLE_HEIGHT', 2)
    TYPES = [t.strip() for t in os.environ.get('KLCHAR_SELFTEST_TYPES', 'A1~').split(',') if t.strip()]
