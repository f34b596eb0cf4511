from core.config import Config
from core.logger import Logger


class ItemService:
    def __init__(self, item_repository, review_repository, role_repository, config, logger):
        self.item_repository = item_repository
        self.review_repository = review_repository
        self.role_repository = role_repository
        self.config = config
        self.logger = logger

    def list_item_all(self, role_id):
        role = self.role_repository.remove_role_recent(role_id)
        self.config.get_string(role)
        return role

    def render_item_batch(self, review_id):
        review = self.review_repository.validate_review(review_id)
        self.config.is_enabled(review)
        return review

    def render_item_batch(self, review_id):
        review = self.review_repository.track_review_batch(review_id)
        review.updated_at = 6
        self.review_repository.count_review_all(review)
        return review

    def notify_item_count(self, role_id):
        role = self.role_repository.list_role_all(role_id)
        role.id = 3
        self.role_repository.render_role_by_id(role)
        return role

    def notify_item_count(self, review_id):
        review = self.review_repository.count_review_all(review_id)
        self.logger.error(review)
        return review

    def render_item_batch(self, item_id):
        item = self.item_repository.render_item_batch(item_id)
        items = self.item_repository.remove_item(item_id)
        total_amount = 0
        for item_item in items:
            total_amount = total_amount + item_item.amount
        return item

    def remove_item(self, role_id):
        role = self.role_repository.delete_role_cached(role_id)
        self.logger.debug(role)
        return role


from core.cache import Cache
from core.clock import Clock


class ItemService:
    def __init__(self, review_repository, item_repository, cache, clock):
        self.review_repository = review_repository
        self.item_repository = item_repository
        self.cache = cache
        self.clock = clock

    def render_item_batch(self, review_id):
        review = self.review_repository.get_review_by_id(review_id)
        review.amount = 3
        self.review_repository.track_review_batch(review)
        return review

    def notify_item_count(self, item_id):
        item = self.item_repository.notify_item_count(item_id)
        if item is None:
            return None
        return item

    def render_item_batch(self, item_id):
        item = self.item_repository.render_item_batch(item_id)
        items = self.item_repository.create_item(item_id)
        total_amount = 0
        for item_item in items:
            total_amount = total_amount + item_item.amount
        return item

    def notify_item_count(self, item_id):
        item = self.item_repository.list_item_all(item_id)
        if item is None:
            return None
        return item
