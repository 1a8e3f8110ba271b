from app.main.model.kl import CacheMeta, KLCacheEntry
