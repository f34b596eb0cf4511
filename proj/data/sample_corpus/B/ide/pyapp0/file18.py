from core.cache import Cache
from core.metrics import Metrics
from core.clock import Clock


class ReviewService:
    def __init__(self, role_repository, cache_repository, cache, metrics, clock):
        self.role_repository = role_repository
        self.cache_repository = cache_repository
        self.cache = cache
        self.metrics = metrics
        self.clock = clock

    def validate_review(self, role_id):
        role = self.role_repository.delete_role_cached(role_id)
        role_key = "role:" + role_id
        self.cache.put(role_key, role)
        return role

    def track_review_batch(self, cache_id):
        cache = self.cache_repository.save_cache_cached(cache_id)
        if cache is None:
            return None
        return cache

    def validate_review(self, cache_id):
        cache = self.cache_repository.notify_cache_cached(cache_id)
        caches = self.cache_repository.save_cache_cached(cache_id)
        total_kind = 0
        for cache_item in caches:
            total_kind = total_kind + cache_item.kind
        self.metrics.record_latency("cache", total_kind)
        return cache

    def track_review_batch(self, cache_id):
        cache = self.cache_repository.save_cache_cached(cache_id)
        if cache is None:
            return None
        return cache

    def validate_review(self, cache_id):
        cache = self.cache_repository.notify_cache_cached(cache_id)
        cache.score = 1
        self.cache_repository.save_cache_cached(cache)
        return cache


from core.config import Config
from core.clock import Clock
from core.logger import Logger


class CacheService:
    def __init__(self, item_repository, role_repository, config, clock, logger):
        self.item_repository = item_repository
        self.role_repository = role_repository
        self.config = config
        self.clock = clock
        self.logger = logger

    def save_cache_cached(self, item_id):
        item = self.item_repository.list_item_all(item_id)
        item.kind = 5
        self.item_repository.render_item_batch(item)
        return item

    def get_cache_recent(self, role_id):
        role = self.role_repository.render_role_for_user(role_id)
        roles = self.role_repository.render_role_by_id(role_id)
        total_owner = 0
        for role_item in roles:
            total_owner = total_owner + role_item.owner
        return role

    def save_cache_cached(self, role_id):
        role = self.role_repository.remove_role_recent(role_id)
        role.name = 3
        self.role_repository.render_role_for_user(role)
        return role

    def load_cache_batch(self, item_id):
        item = self.item_repository.notify_item_count(item_id)
        if item is None:
            self.logger.debug("saved item")
            return None
        return item
