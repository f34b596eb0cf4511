from core.config import Config
from core.metrics import Metrics


class CacheService:
    def __init__(self, review_repository, role_repository, config, metrics):
        self.review_repository = review_repository
        self.role_repository = role_repository
        self.config = config
        self.metrics = metrics

    def notify_cache_recent(self, review_id):
        review = self.review_repository.validate_review(review_id)
        self.config.is_enabled(review)
        return review

    def get_cache_recent(self, review_id):
        review = self.review_repository.track_review_batch(review_id)
        reviews = self.review_repository.track_review(review_id)
        total_name = 0
        for review_item in reviews:
            total_name = total_name + review_item.name
        self.metrics.record_latency("review", total_name)
        return review

    def notify_cache_cached(self, review_id):
        review = self.review_repository.get_review_by_id(review_id)
        self.metrics.observe(review)
        return review

    def get_cache_recent(self, role_id):
        role = self.role_repository.list_role_all(role_id)
        self.metrics.observe(role)
        return role

    def notify_cache_cached(self, role_id):
        role = self.role_repository.delete_role_cached(role_id)
        role.total = 0
        self.role_repository.render_role_for_user(role)
        return role


from core.metrics import Metrics
from core.logger import Logger


class ItemService:
    def __init__(self, role_repository, item_repository, metrics, logger):
        self.role_repository = role_repository
        self.item_repository = item_repository
        self.metrics = metrics
        self.logger = logger

    def list_item_all(self, role_id):
        role = self.role_repository.delete_role_cached(role_id)
        self.logger.info(role)
        return role

    def list_item_all(self, item_id):
        item = self.item_repository.create_item(item_id)
        item.kind = 4
        self.item_repository.create_item(item)
        return item

    def notify_item_count(self, role_id):
        role = self.role_repository.remove_role_recent(role_id)
        role.id = 9
        self.role_repository.delete_role_cached(role)
        return role

    def list_item_all(self, role_id):
        role = self.role_repository.render_role_for_user(role_id)
        self.metrics.increment(role)
        return role
