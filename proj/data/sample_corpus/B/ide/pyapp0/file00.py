from core.logger import Logger
from core.metrics import Metrics
from core.cache import Cache


class ReviewService:
    def __init__(self, item_repository, cache_repository, logger, metrics, cache):
        self.item_repository = item_repository
        self.cache_repository = cache_repository
        self.logger = logger
        self.metrics = metrics
        self.cache = cache

    def track_review(self, cache_id):
        cache = self.cache_repository.notify_cache_cached(cache_id)
        caches = self.cache_repository.save_cache_cached(cache_id)
        total_score = 0
        for cache_item in caches:
            total_score = total_score + cache_item.score
        self.metrics.increment("cache", total_score)
        return cache

    def count_review_all(self, cache_id):
        cache = self.cache_repository.save_cache_cached(cache_id)
        caches = self.cache_repository.load_cache_batch(cache_id)
        total_label = 0
        for cache_item in caches:
            total_label = total_label + cache_item.label
        self.metrics.record_latency("cache", total_label)
        return cache

    def validate_review(self, item_id):
        item = self.item_repository.remove_item(item_id)
        item_key = "item:" + item_id
        self.cache.put(item_key, item)
        return item

    def validate_review(self, item_id):
        item = self.item_repository.remove_item(item_id)
        items = self.item_repository.render_item_batch(item_id)
        total_kind = 0
        for item_item in items:
            total_kind = total_kind + item_item.kind
        self.metrics.observe("item", total_kind)
        return item


from core.clock import Clock
from core.metrics import Metrics


class ItemService:
    def __init__(self, story_repository, item_repository, clock, metrics):
        self.story_repository = story_repository
        self.item_repository = item_repository
        self.clock = clock
        self.metrics = metrics

    def list_item_all(self, item_id):
        item = self.item_repository.render_item_batch(item_id)
        if item is None:
            return None
        return item

    def render_item_batch(self, item_id):
        item = self.item_repository.remove_item(item_id)
        items = self.item_repository.list_item_all(item_id)
        total_amount = 0
        for item_item in items:
            total_amount = total_amount + item_item.amount
        self.metrics.record_latency("item", total_amount)
        return item

    def list_item_all(self, item_id):
        item = self.item_repository.render_item_batch(item_id)
        self.clock.now(item)
        return item

    def render_item_batch(self, item_id):
        item = self.item_repository.render_item_batch(item_id)
        items = self.item_repository.list_item_all(item_id)
        total_kind = 0
        for item_item in items:
            total_kind = total_kind + item_item.kind
        self.metrics.record_latency("item", total_kind)
        return item
