"""Kazhdan-Lusztig polynomials P, mu and the inverse polynomials Q for W(lambda)"""
import json
import logging
import threading
from typing import Dict, List, Optional, Tuple

from sqlalchemy.exc import SQLAlchemyError

from app.main import CACHE_VERSION, get_cache_session_factory
from app.main.config import Config
from app.main.model.coxeter import CoxeterElement
from app.main.model.kl import CacheMeta, KLCacheEntry, KLEntrySchema, KLPoly
from app.main.service.coxeter_service import CoxeterSystem
from app.main.util.exceptions import NotComparable

logger = logging.getLogger(__name__)

MemoKey = Tuple[str, Tuple[int, ...], Tuple[int, ...]]


def _word_text(word: Tuple[int, ...]) -> str:
    return ",".join(str(i) for i in word)


def _parse_word(text: str) -> Tuple[int, ...]:
    return tuple(int(i) for i in text.split(",")) if text else ()


class KLCache:
    """Memo of P and Q for one Coxeter system, optionally backed by the cache file.

    Reads are lock-free; writes to the memo go through ``_lock``.
    """

    def __init__(self, system: CoxeterSystem, cache_dir: Optional[str] = None):
        self.system = system
        self.cache_dir = cache_dir
        self._memo: Dict[MemoKey, KLPoly] = {}
        self._new: List[MemoKey] = []
        self._mu_lists: Dict[Tuple[int, ...], List[Tuple[CoxeterElement, int]]] = {}
        self._lock = threading.Lock()
        if cache_dir:
            self.load()

    # persistence

    def load(self):
        """Read all rows of this system; any failure means a cold start"""
        factory = get_cache_session_factory(self.cache_dir)
        if factory is None:
            return
        db = factory()
        try:
            meta = db.query(CacheMeta).first()
            if meta is not None and meta.version != CACHE_VERSION:
                logger.info(f"Discarding KL cache with version {meta.version}")
                db.query(KLCacheEntry).delete()
                meta.version = CACHE_VERSION
                db.commit()
                return
            rows = db.query(KLCacheEntry).filter(KLCacheEntry.system_key == self.system.key).all()
            with self._lock:
                for row in rows:
                    key = (row.kind, _parse_word(row.y_word), _parse_word(row.w_word))
                    self._memo[key] = KLPoly(tuple(json.loads(row.coeffs)))
            logger.info(f"Loaded {len(rows)} KL entries for {self.system.key}")
        except (SQLAlchemyError, ValueError) as e:
            db.rollback()
            logger.error(f"Could not read KL cache in {self.cache_dir}: {e}")
        finally:
            db.close()

    def flush(self) -> int:
        """Write entries computed since the last load or flush"""
        if not self.cache_dir or not self._new:
            return 0
        factory = get_cache_session_factory(self.cache_dir)
        if factory is None:
            return 0
        db = factory()
        with self._lock:
            pending = list(self._new)
            self._new.clear()
        try:
            if db.query(CacheMeta).first() is None:
                db.add(CacheMeta(id=1, version=CACHE_VERSION))
            for kind, y_word, w_word in pending:
                db.add(KLCacheEntry(
                    system_key=self.system.key,
                    kind=kind,
                    y_word=_word_text(y_word),
                    w_word=_word_text(w_word),
                    coeffs=json.dumps(list(self._memo[(kind, y_word, w_word)].coeffs)),
                ))
            db.commit()
            logger.info(f"Flushed {len(pending)} KL entries for {self.system.key}")
            return len(pending)
        except SQLAlchemyError as e:
            db.rollback()
            logger.error(f"Could not write KL cache in {self.cache_dir}: {e}")
            return 0
        finally:
            db.close()

    def _put(self, key: MemoKey, value: KLPoly) -> KLPoly:
        with self._lock:
            if key not in self._memo:
                self._memo[key] = value
                self._new.append(key)
        return value

    def __len__(self) -> int:
        return len(self._memo)

    # polynomials

    def kl_polynomial(self, y: CoxeterElement, w: CoxeterElement) -> KLPoly:
        """P_{y,w} by the recursion on the first letter s of w, v = s w:

        P_{y,w} = q^{1-c} P_{sy,v} + q^c P_{y,v}
                  - sum_{y <= z < v, sz < z} mu(z, v) q^{(l(w) - l(z))/2} P_{y,z}
        with c = 1 if sy < y, else 0.
        """
        system = self.system
        if not system.bruhat_leq(y, w):
            return KLPoly.zero()
        if y == w:
            return KLPoly.one()
        key = ("P", y.word, w.word)
        cached = self._memo.get(key)
        if cached is not None:
            return cached

        s = w.word[0]
        v = system.left_multiply(s, w)
        sy = system.left_multiply(s, y)
        c = 1 if system.is_left_descent(s, y) else 0
        result = self.kl_polynomial(sy, v).shift(1 - c) + self.kl_polynomial(y, v).shift(c)
        for z, m in self._mu_list(v):
            if system.is_left_descent(s, z) and system.bruhat_leq(y, z):
                result = result - self.kl_polynomial(y, z).shift((w.length - z.length) // 2).scaled(m)
        return self._put(key, result)

    def _mu_list(self, v: CoxeterElement) -> List[Tuple[CoxeterElement, int]]:
        """All z < v with mu(z, v) != 0"""
        cached = self._mu_lists.get(v.key)
        if cached is not None:
            return cached
        result = []
        for z in sorted(self.system.below(v), key=lambda u: (u.length, u.word)):
            if z == v:
                continue
            m = self.mu(z, v)
            if m:
                result.append((z, m))
        with self._lock:
            self._mu_lists[v.key] = result
        return result

    def mu(self, y: CoxeterElement, w: CoxeterElement) -> int:
        """Coefficient of q^{(l(w) - l(y) - 1)/2} in P_{y,w}"""
        gap = w.length - y.length
        if gap <= 0 or gap % 2 == 0 or not self.system.bruhat_leq(y, w):
            return 0
        return self.kl_polynomial(y, w).coefficient((gap - 1) // 2)

    def inverse_kl(self, x: CoxeterElement, z: CoxeterElement) -> KLPoly:
        """Q_{x,z} from sum_{x <= y <= z} (-1)^{l(y)-l(x)} Q_{x,y} P_{y,z} = delta_{x,z}"""
        system = self.system
        if not system.bruhat_leq(x, z):
            raise NotComparable(f"{x} is not below {z}")
        if x == z:
            return KLPoly.one()
        key = ("Q", x.word, z.word)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        total = KLPoly.zero()
        for y in sorted(system.below(z), key=lambda u: (u.length, u.word)):
            if y == z or not system.bruhat_leq(x, y):
                continue
            term = self.inverse_kl(x, y) * self.kl_polynomial(y, z)
            total = total + (term if (y.length - x.length) % 2 == 0 else -term)
        sign = -1 if (z.length - x.length) % 2 == 0 else 1
        return self._put(key, total.scaled(sign))

    def table(self, elements: List[CoxeterElement]) -> List[KLEntrySchema]:
        """(y, w) rows with y <= w over the given elements"""
        entries = []
        for w in elements:
            for y in elements:
                if not self.system.bruhat_leq(y, w):
                    continue
                p = self.kl_polynomial(y, w)
                entries.append(KLEntrySchema(y_word=list(y.word), w_word=list(w.word), polynomial=str(p),
                                             coeffs=list(p.coeffs), mu=self.mu(y, w)))
        return entries


_caches: Dict[Tuple[str, Optional[str]], KLCache] = {}
_caches_lock = threading.Lock()


def get_kl_cache(system: CoxeterSystem, cache_dir: Optional[str] = None) -> KLCache:
    """Shared KLCache per (system, cache directory); defaults to Config.CACHE_DIR"""
    cache_dir = cache_dir if cache_dir is not None else Config.CACHE_DIR
    key = (system.key, cache_dir)
    with _caches_lock:
        cache = _caches.get(key)
        if cache is None or cache.system is not system:
            cache = KLCache(system, cache_dir)
            _caches[key] = cache
    return cache


def flush_all() -> int:
    """Persist every cache that has a directory"""
    with _caches_lock:
        caches = list(_caches.values())
    return sum(cache.flush() for cache in caches)
