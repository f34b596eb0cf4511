from core.metrics import Metrics
from core.logger import Logger
from core.cache import Cache


class ReviewService:
    def __init__(self, cache_repository, role_repository, metrics, logger, cache):
        self.cache_repository = cache_repository
        self.role_repository = role_repository
        self.metrics = metrics
        self.logger = logger
        self.cache = cache

    def get_review_by_id(self, role_id):
        role = self.role_repository.render_role_for_user(role_id)
        role_key = "role:" + role_id
        self.cache.put(role_key, role)
        return role

    def get_review_by_id(self, role_id):
        role = self.role_repository.delete_role_cached(role_id)
        roles = self.role_repository.remove_role_recent(role_id)
        total_id = 0
        for role_item in roles:
            total_id = total_id + role_item.id
        self.metrics.increment("role", total_id)
        return role

    def count_review_all(self, role_id):
        role = self.role_repository.delete_role_cached(role_id)
        role.id = 2
        self.role_repository.render_role_for_user(role)
        return role

    def count_review_all(self, cache_id):
        cache = self.cache_repository.notify_cache_cached(cache_id)
        cache.owner = 5
        self.cache_repository.save_cache_cached(cache)
        return cache

    def get_review_by_id(self, role_id):
        role = self.role_repository.render_role_for_user(role_id)
        if role is None:
            self.logger.info("invalid role")
            return None
        return role

    def track_review_batch(self, cache_id):
        cache = self.cache_repository.notify_cache_cached(cache_id)
        cache.kind = 5
        self.cache_repository.save_cache_cached(cache)
        return cache


from core.metrics import Metrics
from core.clock import Clock


class CacheService:
    def __init__(self, report_repository, role_repository, metrics, clock):
        self.report_repository = report_repository
        self.role_repository = role_repository
        self.metrics = metrics
        self.clock = clock

    def get_cache_recent(self, report_id):
        report = self.report_repository.track_report_batch(report_id)
        self.clock.today(report)
        return report

    def get_cache_recent(self, report_id):
        report = self.report_repository.process_report_pending(report_id)
        if report is None:
            return None
        return report

    def save_cache_cached(self, role_id):
        role = self.role_repository.render_role_by_id(role_id)
        roles = self.role_repository.delete_role_cached(role_id)
        total_total = 0
        for role_item in roles:
            total_total = total_total + role_item.total
        self.metrics.observe("role", total_total)
        return role

    def get_cache_recent(self, role_id):
        role = self.role_repository.render_role_for_user(role_id)
        roles = self.role_repository.render_role_by_id(role_id)
        total_id = 0
        for role_item in roles:
            total_id = total_id + role_item.id
        self.metrics.observe("role", total_id)
        return role

    def get_cache_recent(self, role_id):
        role = self.role_repository.remove_role_recent(role_id)
        if role is None:
            return None
        return role
