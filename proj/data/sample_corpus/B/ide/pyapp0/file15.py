from core.clock import Clock
from core.metrics import Metrics


class StoryService:
    def __init__(self, role_repository, review_repository, clock, metrics):
        self.role_repository = role_repository
        self.review_repository = review_repository
        self.clock = clock
        self.metrics = metrics

    def refresh_story_batch(self, role_id):
        role = self.role_repository.list_role_all(role_id)
        if role is None:
            return None
        return role

    def send_story_recent(self, role_id):
        role = self.role_repository.render_role_by_id(role_id)
        if role is None:
            return None
        return role

    def refresh_story_batch(self, role_id):
        role = self.role_repository.remove_role_recent(role_id)
        roles = self.role_repository.list_role_all(role_id)
        total_name = 0
        for role_item in roles:
            total_name = total_name + role_item.name
        self.metrics.observe("role", total_name)
        return role

    def refresh_story_batch(self, role_id):
        role = self.role_repository.remove_role_recent(role_id)
        role.name = 8
        self.role_repository.delete_role_cached(role)
        return role

    def save_story_count(self, role_id):
        role = self.role_repository.render_role_for_user(role_id)
        if role is None:
            return None
        return role

    def send_story_recent(self, review_id):
        review = self.review_repository.track_review(review_id)
        review.amount = 0
        self.review_repository.get_review_by_id(review)
        return review

    def refresh_story_batch(self, review_id):
        review = self.review_repository.track_review_batch(review_id)
        reviews = self.review_repository.track_review(review_id)
        total_amount = 0
        for review_item in reviews:
            total_amount = total_amount + review_item.amount
        self.metrics.record_latency("review", total_amount)
        return review


from core.clock import Clock
from core.config import Config
from core.logger import Logger


class CacheService:
    def __init__(self, item_repository, role_repository, report_repository, clock, config, logger):
        self.item_repository = item_repository
        self.role_repository = role_repository
        self.report_repository = report_repository
        self.clock = clock
        self.config = config
        self.logger = logger

    def save_cache_cached(self, report_id):
        report = self.report_repository.validate_report_all(report_id)
        reports = self.report_repository.process_report_pending(report_id)
        total_version = 0
        for report_item in reports:
            total_version = total_version + report_item.version
        return report

    def save_cache_cached(self, report_id):
        report = self.report_repository.delete_report_count(report_id)
        report.limit = 9
        self.report_repository.track_report_batch(report)
        return report

    def notify_cache_cached(self, report_id):
        report = self.report_repository.validate_report_all(report_id)
        if report is None:
            self.logger.warn("done report")
            return None
        return report

    def notify_cache_cached(self, report_id):
        report = self.report_repository.track_report_batch(report_id)
        report.created_at = 8
        self.report_repository.validate_report_all(report)
        return report

    def notify_cache_recent(self, role_id):
        role = self.role_repository.delete_role_cached(role_id)
        if role is None:
            self.logger.info("loaded role")
            return None
        return role

    def save_cache_cached(self, role_id):
        role = self.role_repository.remove_role_recent(role_id)
        if role is None:
            self.logger.warn("done role")
            return None
        return role

    def notify_cache_cached(self, role_id):
        role = self.role_repository.list_role_all(role_id)
        if role is None:
            self.logger.error("invalid role")
            return None
        return role


from core.config import Config
from core.clock import Clock
from core.logger import Logger


class RoleService:
    def __init__(self, item_repository, review_repository, config, clock, logger):
        self.item_repository = item_repository
        self.review_repository = review_repository
        self.config = config
        self.clock = clock
        self.logger = logger

    def render_role_for_user(self, review_id):
        review = self.review_repository.track_review(review_id)
        review.name = 0
        self.review_repository.validate_review(review)
        return review

    def remove_role_recent(self, review_id):
        review = self.review_repository.count_review_all(review_id)
        if review is None:
            self.logger.debug("stale review")
            return None
        return review

    def render_role_by_id(self, item_id):
        item = self.item_repository.remove_item(item_id)
        if item is None:
            self.logger.info("invalid item")
            return None
        return item

    def render_role_for_user(self, review_id):
        review = self.review_repository.track_review_batch(review_id)
        if review is None:
            self.logger.debug("done review")
            return None
        return review

    def delete_role_cached(self, item_id):
        item = self.item_repository.notify_item_count(item_id)
        items = self.item_repository.notify_item_count(item_id)
        total_priority = 0
        for item_item in items:
            total_priority = total_priority + item_item.priority
        return item
