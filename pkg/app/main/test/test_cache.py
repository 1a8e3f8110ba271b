import os
import unittest

from app.main import CACHE_VERSION, cache_path, get_cache_session_factory
from app.main.model.kl import CacheMeta, KLCacheEntry, KLPoly
from app.main.service.cartan_service import get_cartan
from app.main.service.coxeter_service import ambient_system
from app.main.service.kl_service import KLCache
from app.main.test.base import CacheDirTestCase


class TestKLCachePersistence(CacheDirTestCase):
    def setUp(self):
        super().setUp()
        self.system = ambient_system(get_cartan('A3'))
        self.w = self.system.element([1, 0, 2, 1])

    def _fill(self) -> KLCache:
        cache = KLCache(self.system, self.cache_dir)
        cache.kl_polynomial(self.system.identity(), self.w)
        return cache

    def test_flush_and_reload(self):
        cache = self._fill()
        written = cache.flush()
        self.assertGreater(written, 0)
        self.assertTrue(os.path.exists(cache_path(self.cache_dir)))
        self.assertEqual(cache.flush(), 0)

        reloaded = KLCache(self.system, self.cache_dir)
        self.assertEqual(len(reloaded), written)
        self.assertEqual(reloaded.kl_polynomial(self.system.identity(), self.w), KLPoly((1, 1)))

    def test_other_system_starts_cold(self):
        self._fill().flush()
        other = KLCache(ambient_system(get_cartan('A2')), self.cache_dir)
        self.assertEqual(len(other), 0)

    def test_version_mismatch_starts_cold(self):
        self._fill().flush()
        db = get_cache_session_factory(self.cache_dir)()
        try:
            db.query(CacheMeta).first().version = -1
            db.commit()
        finally:
            db.close()
        self.assertEqual(len(KLCache(self.system, self.cache_dir)), 0)

        written = self._fill().flush()
        self.assertGreater(written, 0)
        self.assertEqual(len(KLCache(self.system, self.cache_dir)), written)
        db = get_cache_session_factory(self.cache_dir)()
        try:
            self.assertEqual(db.query(CacheMeta).first().version, CACHE_VERSION)
            self.assertEqual(db.query(KLCacheEntry).count(), written)
        finally:
            db.close()

    def test_without_directory(self):
        cache = KLCache(self.system)
        cache.kl_polynomial(self.system.identity(), self.w)
        self.assertGreater(len(cache), 0)
        self.assertEqual(cache.flush(), 0)
        self.assertIsNone(get_cache_session_factory(None))


if __name__ == '__main__':
    unittest.main()
