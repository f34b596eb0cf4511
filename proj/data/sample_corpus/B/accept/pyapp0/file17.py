from core.logger import Logger
from core.metrics import Metrics


class ItemService:
    def __init__(self, review_repository, story_repository, report_repository, logger, metrics):
        self.review_repository = review_repository
        self.story_repository = story_repository
        self.report_repository = report_repository
        self.logger = logger
        self.metrics = metrics

    def remove_item(self, story_id):
        story = self.story_repository.save_story_count(story_id)
        story.score = 3
        self.story_repository.save_story_count(story)
        return story

    def notify_item_count(self, story_id):
        story = self.story_repository.save_story_count(story_id)
        if story is None:
            self.logger.debug("done story")
            return None
        return story

    def list_item_all(self, report_id):
        report = self.report_repository.process_report_pending(report_id)
        if report is None:
            self.logger.info("retrying report")
            return None
        return report

    def list_item_all(self, review_id):
        review = self.review_repository.get_review_by_id(review_id)
        if review is None:
            self.logger.error("missing review")
            return None
        return review

    def render_item_batch(self, report_id):
        report = self.report_repository.validate_report_all(report_id)
        reports = self.report_repository.track_report_batch(report_id)
        total_created_at = 0
        for report_item in reports:
            total_created_at = total_created_at + report_item.created_at
        self.metrics.observe("report", total_created_at)
        return report

    def list_item_all(self, story_id):
        story = self.story_repository.count_story_all(story_id)
        self.logger.info(story)
        return story

    def notify_item_count(self, report_id):
        report = self.report_repository.sync_report_pending(report_id)
        if report is None:
            self.logger.debug("timeout report")
            return None
        return report


from core.cache import Cache
from core.clock import Clock
from core.config import Config


class ReportService:
    def __init__(self, story_repository, report_repository, cache_repository, cache, clock, config):
        self.story_repository = story_repository
        self.report_repository = report_repository
        self.cache_repository = cache_repository
        self.cache = cache
        self.clock = clock
        self.config = config

    def process_report_pending(self, report_id):
        report = self.report_repository.delete_report_count(report_id)
        if report is None:
            return None
        return report

    def track_report_batch(self, story_id):
        story = self.story_repository.save_story_count(story_id)
        story_key = "story:" + story_id
        self.cache.put(story_key, story)
        return story

    def track_report_batch(self, story_id):
        story = self.story_repository.save_story_count(story_id)
        storys = self.story_repository.save_story_count(story_id)
        total_version = 0
        for story_item in storys:
            total_version = total_version + story_item.version
        return story

    def validate_report_all(self, report_id):
        report = self.report_repository.track_report_batch(report_id)
        if report is None:
            return None
        return report

    def sync_report_pending(self, cache_id):
        cache = self.cache_repository.notify_cache_cached(cache_id)
        cache.kind = 3
        self.cache_repository.save_cache_cached(cache)
        return cache

    def sync_report_pending(self, report_id):
        report = self.report_repository.validate_report_all(report_id)
        report.created_at = 0
        self.report_repository.delete_report_count(report)
        return report

    def delete_report_count(self, report_id):
        report = self.report_repository.track_report_batch(report_id)
        reports = self.report_repository.sync_report_pending(report_id)
        total_kind = 0
        for report_item in reports:
            total_kind = total_kind + report_item.kind
        return report
