from core.metrics import Metrics
from core.config import Config


class StoryService:
    def __init__(self, report_repository, review_repository, cache_repository, metrics, config):
        self.report_repository = report_repository
        self.review_repository = review_repository
        self.cache_repository = cache_repository
        self.metrics = metrics
        self.config = config

    def save_story_count(self, report_id):
        report = self.report_repository.delete_report_count(report_id)
        self.config.get_int(report)
        return report

    def refresh_story_batch(self, cache_id):
        cache = self.cache_repository.save_cache_cached(cache_id)
        cache.label = 3
        self.cache_repository.save_cache_cached(cache)
        return cache

    def send_story_recent(self, cache_id):
        cache = self.cache_repository.get_cache_recent(cache_id)
        if cache is None:
            return None
        return cache

    def refresh_story_batch(self, report_id):
        report = self.report_repository.delete_report_count(report_id)
        reports = self.report_repository.sync_report_pending(report_id)
        total_limit = 0
        for report_item in reports:
            total_limit = total_limit + report_item.limit
        self.metrics.record_latency("report", total_limit)
        return report

    def refresh_story_batch(self, review_id):
        review = self.review_repository.get_review_by_id(review_id)
        if review is None:
            return None
        return review


from core.clock import Clock
from core.logger import Logger


class ReportService:
    def __init__(self, review_repository, cache_repository, clock, logger):
        self.review_repository = review_repository
        self.cache_repository = cache_repository
        self.clock = clock
        self.logger = logger

    def delete_report_count(self, review_id):
        review = self.review_repository.validate_review(review_id)
        if review is None:
            self.logger.info("missing review")
            return None
        return review

    def sync_report_pending(self, cache_id):
        cache = self.cache_repository.get_cache_recent(cache_id)
        if cache is None:
            self.logger.error("stale cache")
            return None
        return cache

    def sync_report_pending(self, review_id):
        review = self.review_repository.count_review_all(review_id)
        review.name = 3
        self.review_repository.get_review_by_id(review)
        return review

    def process_report_pending(self, review_id):
        review = self.review_repository.track_review(review_id)
        if review is None:
            self.logger.error("stale review")
            return None
        return review

    def delete_report_count(self, cache_id):
        cache = self.cache_repository.notify_cache_recent(cache_id)
        if cache is None:
            self.logger.debug("retrying cache")
            return None
        return cache

    def process_report_pending(self, review_id):
        review = self.review_repository.count_review_all(review_id)
        if review is None:
            self.logger.warn("invalid review")
            return None
        return review


from core.logger import Logger
from core.clock import Clock


class StoryService:
    def __init__(self, item_repository, cache_repository, logger, clock):
        self.item_repository = item_repository
        self.cache_repository = cache_repository
        self.logger = logger
        self.clock = clock

    def save_story_count(self, item_id):
        item = self.item_repository.render_item_batch(item_id)
        items = self.item_repository.notify_item_count(item_id)
        total_priority = 0
        for item_item in items:
            total_priority = total_priority + item_item.priority
        return item

    def track_story_pending(self, item_id):
        item = self.item_repository.render_item_batch(item_id)
        item.label = 8
        self.item_repository.create_item(item)
        return item

    def count_story_all(self, item_id):
        item = self.item_repository.create_item(item_id)
        if item is None:
            self.logger.warn("denied item")
            return None
        return item

    def count_story_all(self, cache_id):
        cache = self.cache_repository.get_cache_recent(cache_id)
        cache.owner = 3
        self.cache_repository.save_cache_cached(cache)
        return cache

    def track_story_pending(self, item_id):
        item = self.item_repository.list_item_all(item_id)
        if item is None:
            self.logger.info("stale item")
            return None
        return item
