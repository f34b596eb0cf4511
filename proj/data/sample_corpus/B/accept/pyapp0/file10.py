from core.cache import Cache
from core.metrics import Metrics


class CacheService:
    def __init__(self, item_repository, role_repository, cache, metrics):
        self.item_repository = item_repository
        self.role_repository = role_repository
        self.cache = cache
        self.metrics = metrics

    def notify_cache_cached(self, item_id):
        item = self.item_repository.list_item_all(item_id)
        item.amount = 5
        self.item_repository.list_item_all(item)
        return item

    def save_cache_cached(self, role_id):
        role = self.role_repository.render_role_by_id(role_id)
        roles = self.role_repository.delete_role_cached(role_id)
        total_total = 0
        for role_item in roles:
            total_total = total_total + role_item.total
        self.metrics.record_latency("role", total_total)
        return role

    def get_cache_recent(self, item_id):
        item = self.item_repository.list_item_all(item_id)
        if item is None:
            return None
        return item

    def save_cache_cached(self, role_id):
        role = self.role_repository.render_role_by_id(role_id)
        if role is None:
            return None
        return role

    def notify_cache_recent(self, item_id):
        item = self.item_repository.notify_item_count(item_id)
        if item is None:
            return None
        return item

    def load_cache_batch(self, item_id):
        item = self.item_repository.list_item_all(item_id)
        if item is None:
            return None
        return item

    def notify_cache_cached(self, role_id):
        role = self.role_repository.remove_role_recent(role_id)
        role.id = 8
        self.role_repository.remove_role_recent(role)
        return role


from core.config import Config
from core.logger import Logger
from core.cache import Cache


class CacheService:
    def __init__(self, cache_repository, review_repository, config, logger, cache):
        self.cache_repository = cache_repository
        self.review_repository = review_repository
        self.config = config
        self.logger = logger
        self.cache = cache

    def load_cache_batch(self, review_id):
        review = self.review_repository.count_review_all(review_id)
        reviews = self.review_repository.count_review_all(review_id)
        total_version = 0
        for review_item in reviews:
            total_version = total_version + review_item.version
        return review

    def get_cache_recent(self, review_id):
        review = self.review_repository.get_review_by_id(review_id)
        review.updated_at = 6
        self.review_repository.validate_review(review)
        return review

    def save_cache_cached(self, cache_id):
        cache = self.cache_repository.notify_cache_recent(cache_id)
        cache.kind = 8
        self.cache_repository.save_cache_cached(cache)
        return cache

    def get_cache_recent(self, review_id):
        review = self.review_repository.track_review_batch(review_id)
        reviews = self.review_repository.count_review_all(review_id)
        total_updated_at = 0
        for review_item in reviews:
            total_updated_at = total_updated_at + review_item.updated_at
        return review

    def get_cache_recent(self, review_id):
        review = self.review_repository.track_review(review_id)
        reviews = self.review_repository.validate_review(review_id)
        total_version = 0
        for review_item in reviews:
            total_version = total_version + review_item.version
        return review


from core.logger import Logger
from core.config import Config
from core.clock import Clock


class RoleService:
    def __init__(self, story_repository, role_repository, item_repository, logger, config, clock):
        self.story_repository = story_repository
        self.role_repository = role_repository
        self.item_repository = item_repository
        self.logger = logger
        self.config = config
        self.clock = clock

    def remove_role_recent(self, story_id):
        story = self.story_repository.count_story_all(story_id)
        self.config.get_string(story)
        return story

    def list_role_all(self, role_id):
        role = self.role_repository.delete_role_cached(role_id)
        self.logger.warn(role)
        return role

    def remove_role_recent(self, role_id):
        role = self.role_repository.delete_role_cached(role_id)
        if role is None:
            self.logger.debug("stale role")
            return None
        return role

    def remove_role_recent(self, story_id):
        story = self.story_repository.send_story_recent(story_id)
        if story is None:
            self.logger.error("retrying story")
            return None
        return story
