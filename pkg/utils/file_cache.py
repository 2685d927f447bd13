import hashlib
import logging
import time
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import BaseModel, Field, ValidationError

from config import settings

logger = logging.getLogger(__name__)


class CacheEntry(BaseModel):
    """One cached report document as stored on disk."""

    stored_at: float = Field(default_factory=time.time)
    report: Dict[str, Any]


class ReportCache:
    """File-based cache for parameter reports, keyed by graph content and budget."""

    def __init__(self, cache_dir: str):
        self.cache_dir = Path(cache_dir)
        self.cache_dir.mkdir(parents=True, exist_ok=True)

    @staticmethod
    def cache_key(canonical_gr: str, budget_json: str) -> str:
        """SHA-256 over the canonical .gr text and the serialized budget."""
        digest = hashlib.sha256()
        for part in (canonical_gr, budget_json):
            digest.update(part.encode("utf-8"))
            digest.update(b"\0")
        return digest.hexdigest()

    def _entry_path(self, key: str) -> Path:
        return self.cache_dir / f"{key}.json"

    def get(self, key: str) -> Optional[Dict[str, Any]]:
        """
        Look up a cached report.

        Unreadable or malformed entries are removed and reported as misses.
        """
        entry_path = self._entry_path(key)
        if not entry_path.exists():
            return None
        try:
            entry = CacheEntry.model_validate_json(entry_path.read_text(encoding="utf-8"))
        except (OSError, ValidationError) as e:
            logger.error(f"Dropping unreadable cache entry {entry_path.name}: {e}")
            entry_path.unlink(missing_ok=True)
            return None
        logger.debug(f"Report cache hit {key[:12]}")
        return entry.report

    def set(self, key: str, report: Dict[str, Any]) -> bool:
        entry_path = self._entry_path(key)
        try:
            entry_path.write_text(CacheEntry(report=report).model_dump_json(indent=2), encoding="utf-8")
        except OSError as e:
            logger.error(f"Could not write cache entry {entry_path.name}: {e}")
            return False
        logger.debug(f"Report cached {key[:12]}")
        return True

    def invalidate(self, key: str) -> bool:
        entry_path = self._entry_path(key)
        try:
            if not entry_path.exists():
                return False
            entry_path.unlink()
        except OSError as e:
            logger.error(f"Could not invalidate cache entry {key[:12]}: {e}")
            return False
        logger.info(f"Invalidated cached report {key[:12]}")
        return True


_cache_instance: Optional[ReportCache] = None


def get_cache() -> Optional[ReportCache]:
    """Shared cache for the configured directory, or None when caching is off."""
    global _cache_instance
    if not settings.REPORT_CACHE_DIR:
        return None
    wanted = Path(settings.REPORT_CACHE_DIR)
    if _cache_instance is None or _cache_instance.cache_dir != wanted:
        _cache_instance = ReportCache(settings.REPORT_CACHE_DIR)
    return _cache_instance
