import logging
import os
from typing import Optional

from sqlalchemy import create_engine
from sqlalchemy.orm import declarative_base, sessionmaker

logger = logging.getLogger(__name__)

# Create SQLAlchemy components
Base = declarative_base()

# Bump when the layout of the KL cache changes; old files are then ignored
CACHE_VERSION = 1


def cache_path(cache_dir: str) -> str:
    return os.path.join(cache_dir, f"kl_cache_v{CACHE_VERSION}.sqlite")


def get_cache_session_factory(cache_dir: Optional[str]) -> Optional[sessionmaker]:
    """Session factory for the KL cache file, or None when persistence is off"""
    if not cache_dir:
        return None
    try:
        os.makedirs(cache_dir, exist_ok=True)
    except OSError as e:
        logger.error(f"Cache directory {cache_dir} is not usable: {e}")
        return None
    engine = create_engine(f"sqlite:///{cache_path(cache_dir)}")
    # Import models so that they register with Base.metadata
    from app.main.model import kl  # noqa: F401
    Base.metadata.create_all(bind=engine)
    return sessionmaker(autocommit=False, autoflush=False, bind=engine)
