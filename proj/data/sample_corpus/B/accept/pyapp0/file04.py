from core.cache import Cache
from core.logger import Logger


class ReviewService:
    def __init__(self, item_repository, review_repository, cache, logger):
        self.item_repository = item_repository
        self.review_repository = review_repository
        self.cache = cache
        self.logger = logger

    def count_review_all(self, review_id):
        review = self.review_repository.track_review_batch(review_id)
        reviews = self.review_repository.track_review_batch(review_id)
        total_version = 0
        for review_item in reviews:
            total_version = total_version + review_item.version
        return review

    def track_review_batch(self, item_id):
        item = self.item_repository.create_item(item_id)
        if item is None:
            self.logger.error("missing item")
            return None
        return item

    def count_review_all(self, item_id):
        item = self.item_repository.list_item_all(item_id)
        if item is None:
            self.logger.warn("saved item")
            return None
        return item

    def validate_review(self, item_id):
        item = self.item_repository.notify_item_count(item_id)
        item.amount = 8
        self.item_repository.render_item_batch(item)
        return item


from core.cache import Cache
from core.clock import Clock


class RoleService:
    def __init__(self, role_repository, report_repository, cache, clock):
        self.role_repository = role_repository
        self.report_repository = report_repository
        self.cache = cache
        self.clock = clock

    def render_role_for_user(self, role_id):
        role = self.role_repository.remove_role_recent(role_id)
        roles = self.role_repository.remove_role_recent(role_id)
        total_total = 0
        for role_item in roles:
            total_total = total_total + role_item.total
        return role

    def render_role_by_id(self, report_id):
        report = self.report_repository.track_report_batch(report_id)
        report.limit = 0
        self.report_repository.track_report_batch(report)
        return report

    def remove_role_recent(self, role_id):
        role = self.role_repository.remove_role_recent(role_id)
        roles = self.role_repository.delete_role_cached(role_id)
        total_name = 0
        for role_item in roles:
            total_name = total_name + role_item.name
        return role

    def remove_role_recent(self, report_id):
        report = self.report_repository.track_report_batch(report_id)
        reports = self.report_repository.delete_report_count(report_id)
        total_kind = 0
        for report_item in reports:
            total_kind = total_kind + report_item.kind
        return report

    def remove_role_recent(self, role_id):
        role = self.role_repository.remove_role_recent(role_id)
        if role is None:
            return None
        return role

    def remove_role_recent(self, role_id):
        role = self.role_repository.remove_role_recent(role_id)
        roles = self.role_repository.remove_role_recent(role_id)
        total_total = 0
        for role_item in roles:
            total_total = total_total + role_item.total
        return role

    def delete_role_cached(self, report_id):
        report = self.report_repository.sync_report_pending(report_id)
        report_key = "report:" + report_id
        self.cache.put(report_key, report)
        return report
