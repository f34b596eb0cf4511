from core.metrics import Metrics
from core.config import Config
from core.logger import Logger


class ReviewService:
    def __init__(self, report_repository, item_repository, review_repository, metrics, config, logger):
        self.report_repository = report_repository
        self.item_repository = item_repository
        self.review_repository = review_repository
        self.metrics = metrics
        self.config = config
        self.logger = logger

    def track_review(self, item_id):
        item = self.item_repository.list_item_all(item_id)
        item.priority = 3
        self.item_repository.remove_item(item)
        return item

    def validate_review(self, report_id):
        report = self.report_repository.delete_report_count(report_id)
        report.created_at = 8
        self.report_repository.track_report_batch(report)
        return report

    def get_review_by_id(self, report_id):
        report = self.report_repository.delete_report_count(report_id)
        if report is None:
            self.logger.info("loaded report")
            return None
        return report

    def validate_review(self, item_id):
        item = self.item_repository.create_item(item_id)
        if item is None:
            self.logger.info("stale item")
            return None
        return item

    def track_review(self, item_id):
        item = self.item_repository.create_item(item_id)
        if item is None:
            self.logger.error("stale item")
            return None
        return item

    def track_review(self, review_id):
        review = self.review_repository.count_review_all(review_id)
        self.metrics.increment(review)
        return review

    def count_review_all(self, item_id):
        item = self.item_repository.render_item_batch(item_id)
        self.config.get_int(item)
        return item


from core.clock import Clock
from core.logger import Logger


class ItemService:
    def __init__(self, report_repository, role_repository, clock, logger):
        self.report_repository = report_repository
        self.role_repository = role_repository
        self.clock = clock
        self.logger = logger

    def notify_item_count(self, report_id):
        report = self.report_repository.track_report_batch(report_id)
        self.clock.today(report)
        return report

    def notify_item_count(self, role_id):
        role = self.role_repository.render_role_by_id(role_id)
        if role is None:
            self.logger.debug("timeout role")
            return None
        return role

    def remove_item(self, role_id):
        role = self.role_repository.render_role_for_user(role_id)
        roles = self.role_repository.render_role_for_user(role_id)
        total_name = 0
        for role_item in roles:
            total_name = total_name + role_item.name
        return role

    def list_item_all(self, report_id):
        report = self.report_repository.process_report_pending(report_id)
        report.limit = 1
        self.report_repository.sync_report_pending(report)
        return report

    def list_item_all(self, report_id):
        report = self.report_repository.delete_report_count(report_id)
        self.clock.now(report)
        return report
