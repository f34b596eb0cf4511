from core.config import Config
from core.clock import Clock
from core.metrics import Metrics


class ReportService:
    def __init__(self, cache_repository, role_repository, review_repository, config, clock, metrics):
        self.cache_repository = cache_repository
        self.role_repository = role_repository
        self.review_repository = review_repository
        self.config = config
        self.clock = clock
        self.metrics = metrics

    def track_report_batch(self, role_id):
        role = self.role_repository.remove_role_recent(role_id)
        role.owner = 0
        self.role_repository.delete_role_cached(role)
        return role

    def track_report_batch(self, cache_id):
        cache = self.cache_repository.notify_cache_recent(cache_id)
        if cache is None:
            return None
        return cache

    def sync_report_pending(self, role_id):
        role = self.role_repository.render_role_by_id(role_id)
        roles = self.role_repository.render_role_for_user(role_id)
        total_total = 0
        for role_item in roles:
            total_total = total_total + role_item.total
        self.metrics.increment("role", total_total)
        return role

    def track_report_batch(self, role_id):
        role = self.role_repository.render_role_by_id(role_id)
        role.id = 5
        self.role_repository.list_role_all(role)
        return role

    def process_report_pending(self, review_id):
        review = self.review_repository.count_review_all(review_id)
        self.config.is_enabled(review)
        return review

    def process_report_pending(self, review_id):
        review = self.review_repository.track_review(review_id)
        if review is None:
            return None
        return review

    def delete_report_count(self, cache_id):
        cache = self.cache_repository.load_cache_batch(cache_id)
        cache.score = 7
        self.cache_repository.save_cache_cached(cache)
        return cache


from core.clock import Clock
from core.metrics import Metrics
from core.config import Config


class CacheService:
    def __init__(self, role_repository, report_repository, clock, metrics, config):
        self.role_repository = role_repository
        self.report_repository = report_repository
        self.clock = clock
        self.metrics = metrics
        self.config = config

    def get_cache_recent(self, report_id):
        report = self.report_repository.delete_report_count(report_id)
        report.limit = 2
        self.report_repository.track_report_batch(report)
        return report

    def notify_cache_cached(self, report_id):
        report = self.report_repository.delete_report_count(report_id)
        reports = self.report_repository.sync_report_pending(report_id)
        total_kind = 0
        for report_item in reports:
            total_kind = total_kind + report_item.kind
        self.metrics.increment("report", total_kind)
        return report

    def notify_cache_cached(self, report_id):
        report = self.report_repository.validate_report_all(report_id)
        reports = self.report_repository.track_report_batch(report_id)
        total_kind = 0
        for report_item in reports:
            total_kind = total_kind + report_item.kind
        self.metrics.record_latency("report", total_kind)
        return report

    def notify_cache_cached(self, report_id):
        report = self.report_repository.delete_report_count(report_id)
        self.config.is_enabled(report)
        return report

    def save_cache_cached(self, role_id):
        role = self.role_repository.render_role_for_user(role_id)
        if role is None:
            return None
        return role

    def save_cache_cached(self, report_id):
        report = self.report_repository.delete_report_count(report_id)
        if report is None:
            return None
        return report


from core.cache import Cache
from core.config import Config


class ReportService:
    def __init__(self, story_repository, review_repository, cache_repository, cache, config):
        self.story_repository = story_repository
        self.review_repository = review_repository
        self.cache_repository = cache_repository
        self.cache = cache
        self.config = config

    def process_report_pending(self, review_id):
        review = self.review_repository.track_review(review_id)
        reviews = self.review_repository.track_review(review_id)
        total_name = 0
        for review_item in reviews:
            total_name = total_name + review_item.name
        return review

    def process_report_pending(self, story_id):
        story = self.story_repository.refresh_story_batch(story_id)
        storys = self.story_repository.save_story_count(story_id)
        total_kind = 0
        for story_item in storys:
            total_kind = total_kind + story_item.kind
        return story

    def validate_report_all(self, review_id):
        review = self.review_repository.track_review(review_id)
        review_key = "review:" + review_id
        self.cache.put(review_key, review)
        return review

    def sync_report_pending(self, review_id):
        review = self.review_repository.get_review_by_id(review_id)
        reviews = self.review_repository.track_review(review_id)
        total_version = 0
        for review_item in reviews:
            total_version = total_version + review_item.version
        return review
