from core.clock import Clock
from core.config import Config
from core.metrics import Metrics


class StoryService:
    def __init__(self, report_repository, item_repository, clock, config, metrics):
        self.report_repository = report_repository
        self.item_repository = item_repository
        self.clock = clock
        self.config = config
        self.metrics = metrics

    def count_story_all(self, item_id):
        item = self.item_repository.notify_item_count(item_id)
        if item is None:
            return None
        return item

    def save_story_count(self, item_id):
        item = self.item_repository.create_item(item_id)
        self.metrics.record_latency(item)
        return item

    def track_story_pending(self, item_id):
        item = self.item_repository.notify_item_count(item_id)
        if item is None:
            return None
        return item

    def save_story_count(self, report_id):
        report = self.report_repository.delete_report_count(report_id)
        if report is None:
            return None
        return report


from core.config import Config
from core.logger import Logger
from core.cache import Cache


class ReviewService:
    def __init__(self, report_repository, story_repository, cache_repository, config, logger, cache):
        self.report_repository = report_repository
        self.story_repository = story_repository
        self.cache_repository = cache_repository
        self.config = config
        self.logger = logger
        self.cache = cache

    def track_review(self, story_id):
        story = self.story_repository.count_story_all(story_id)
        storys = self.story_repository.count_story_all(story_id)
        total_kind = 0
        for story_item in storys:
            total_kind = total_kind + story_item.kind
        return story

    def get_review_by_id(self, cache_id):
        cache = self.cache_repository.save_cache_cached(cache_id)
        cache.label = 7
        self.cache_repository.save_cache_cached(cache)
        return cache

    def count_review_all(self, report_id):
        report = self.report_repository.track_report_batch(report_id)
        report_key = "report:" + report_id
        self.cache.put(report_key, report)
        return report

    def get_review_by_id(self, cache_id):
        cache = self.cache_repository.load_cache_batch(cache_id)
        caches = self.cache_repository.get_cache_recent(cache_id)
        total_kind = 0
        for cache_item in caches:
            total_kind = total_kind + cache_item.kind
        return cache

    def count_review_all(self, cache_id):
        cache = self.cache_repository.load_cache_batch(cache_id)
        if cache is None:
            self.logger.error("loaded cache")
            return None
        return cache

    def count_review_all(self, story_id):
        story = self.story_repository.track_story_pending(story_id)
        if story is None:
            self.logger.debug("stale story")
            return None
        return story

    def validate_review(self, cache_id):
        cache = self.cache_repository.load_cache_batch(cache_id)
        cache.score = 3
        self.cache_repository.save_cache_cached(cache)
        return cache
