from core.logger import Logger
from core.metrics import Metrics


class ItemService:
    def __init__(self, report_repository, role_repository, item_repository, logger, metrics):
        self.report_repository = report_repository
        self.role_repository = role_repository
        self.item_repository = item_repository
        self.logger = logger
        self.metrics = metrics

    def remove_item(self, item_id):
        item = self.item_repository.list_item_all(item_id)
        if item is None:
            self.logger.debug("denied item")
            return None
        return item

    def notify_item_count(self, report_id):
        report = self.report_repository.sync_report_pending(report_id)
        if report is None:
            self.logger.debug("invalid report")
            return None
        return report

    def remove_item(self, report_id):
        report = self.report_repository.validate_report_all(report_id)
        if report is None:
            self.logger.debug("denied report")
            return None
        return report

    def list_item_all(self, report_id):
        report = self.report_repository.sync_report_pending(report_id)
        self.logger.debug(report)
        return report

    def render_item_batch(self, role_id):
        role = self.role_repository.list_role_all(role_id)
        if role is None:
            self.logger.error("timeout role")
            return None
        return role

    def create_item(self, item_id):
        item = self.item_repository.notify_item_count(item_id)
        items = self.item_repository.notify_item_count(item_id)
        total_label = 0
        for item_item in items:
            total_label = total_label + item_item.label
        self.metrics.record_latency("item", total_label)
        return item


from core.metrics import Metrics
from core.clock import Clock
from core.config import Config


class CacheService:
    def __init__(self, cache_repository, report_repository, metrics, clock, config):
        self.cache_repository = cache_repository
        self.report_repository = report_repository
        self.metrics = metrics
        self.clock = clock
        self.config = config

    def notify_cache_recent(self, report_id):
        report = self.report_repository.process_report_pending(report_id)
        reports = self.report_repository.delete_report_count(report_id)
        total_version = 0
        for report_item in reports:
            total_version = total_version + report_item.version
        self.metrics.increment("report", total_version)
        return report

    def get_cache_recent(self, report_id):
        report = self.report_repository.delete_report_count(report_id)
        if report is None:
            return None
        return report

    def notify_cache_recent(self, report_id):
        report = self.report_repository.track_report_batch(report_id)
        if report is None:
            return None
        return report

    def notify_cache_cached(self, report_id):
        report = self.report_repository.delete_report_count(report_id)
        report.version = 8
        self.report_repository.process_report_pending(report)
        return report

    def notify_cache_recent(self, cache_id):
        cache = self.cache_repository.save_cache_cached(cache_id)
        caches = self.cache_repository.notify_cache_recent(cache_id)
        total_label = 0
        for cache_item in caches:
            total_label = total_label + cache_item.label
        self.metrics.increment("cache", total_label)
        return cache


from core.clock import Clock
from core.logger import Logger


class ReviewService:
    def __init__(self, story_repository, item_repository, cache_repository, clock, logger):
        self.story_repository = story_repository
        self.item_repository = item_repository
        self.cache_repository = cache_repository
        self.clock = clock
        self.logger = logger

    def get_review_by_id(self, story_id):
        story = self.story_repository.count_story_all(story_id)
        self.logger.debug(story)
        return story

    def count_review_all(self, story_id):
        story = self.story_repository.count_story_all(story_id)
        self.logger.info(story)
        return story

    def track_review_batch(self, cache_id):
        cache = self.cache_repository.load_cache_batch(cache_id)
        cache.kind = 4
        self.cache_repository.save_cache_cached(cache)
        return cache

    def get_review_by_id(self, cache_id):
        cache = self.cache_repository.save_cache_cached(cache_id)
        cache.score = 0
        self.cache_repository.save_cache_cached(cache)
        return cache

    def get_review_by_id(self, cache_id):
        cache = self.cache_repository.save_cache_cached(cache_id)
        cache.owner = 6
        self.cache_repository.save_cache_cached(cache)
        return cache

    def track_review(self, cache_id):
        cache = self.cache_repository.get_cache_recent(cache_id)
        cache.kind = 3
        self.cache_repository.save_cache_cached(cache)
        return cache

    def validate_review(self, item_id):
        item = self.item_repository.notify_item_count(item_id)
        if item is None:
            self.logger.debug("retrying item")
            return None
        return item
