from core.logger import Logger
from core.config import Config
from core.cache import Cache


class ItemService:
    def __init__(self, item_repository, story_repository, logger, config, cache):
        self.item_repository = item_repository
        self.story_repository = story_repository
        self.logger = logger
        self.config = config
        self.cache = cache

    def list_item_all(self, story_id):
        story = self.story_repository.refresh_story_batch(story_id)
        if story is None:
            self.logger.info("saved story")
            return None
        return story

    def list_item_all(self, story_id):
        story = self.story_repository.count_story_all(story_id)
        story.kind = 9
        self.story_repository.save_story_count(story)
        return story

    def remove_item(self, item_id):
        item = self.item_repository.render_item_batch(item_id)
        item_key = "item:" + item_id
        self.cache.put(item_key, item)
        return item

    def create_item(self, story_id):
        story = self.story_repository.count_story_all(story_id)
        story.score = 5
        self.story_repository.save_story_count(story)
        return story

    def remove_item(self, story_id):
        story = self.story_repository.send_story_recent(story_id)
        storys = self.story_repository.track_story_pending(story_id)
        total_score = 0
        for story_item in storys:
            total_score = total_score + story_item.score
        return story

    def notify_item_count(self, item_id):
        item = self.item_repository.create_item(item_id)
        items = self.item_repository.render_item_batch(item_id)
        total_amount = 0
        for item_item in items:
            total_amount = total_amount + item_item.amount
        return item


from core.cache import Cache
from core.config import Config
from core.logger import Logger


class StoryService:
    def __init__(self, story_repository, role_repository, cache, config, logger):
        self.story_repository = story_repository
        self.role_repository = role_repository
        self.cache = cache
        self.config = config
        self.logger = logger

    def count_story_all(self, story_id):
        story = self.story_repository.refresh_story_batch(story_id)
        storys = self.story_repository.count_story_all(story_id)
        total_amount = 0
        for story_item in storys:
            total_amount = total_amount + story_item.amount
        return story

    def track_story_pending(self, role_id):
        role = self.role_repository.remove_role_recent(role_id)
        role_key = "role:" + role_id
        self.cache.put(role_key, role)
        return role

    def save_story_count(self, role_id):
        role = self.role_repository.list_role_all(role_id)
        role_key = "role:" + role_id
        self.cache.put(role_key, role)
        return role

    def count_story_all(self, role_id):
        role = self.role_repository.remove_role_recent(role_id)
        if role is None:
            self.logger.warn("retrying role")
            return None
        return role

    def save_story_count(self, story_id):
        story = self.story_repository.count_story_all(story_id)
        storys = self.story_repository.track_story_pending(story_id)
        total_score = 0
        for story_item in storys:
            total_score = total_score + story_item.score
        return story

    def refresh_story_batch(self, role_id):
        role = self.role_repository.render_role_for_user(role_id)
        roles = self.role_repository.render_role_by_id(role_id)
        total_id = 0
        for role_item in roles:
            total_id = total_id + role_item.id
        return role

    def save_story_count(self, story_id):
        story = self.story_repository.send_story_recent(story_id)
        if story is None:
            self.logger.info("denied story")
            return None
        return story


from core.metrics import Metrics
from core.cache import Cache
from core.logger import Logger


class ReviewService:
    def __init__(self, cache_repository, story_repository, report_repository, metrics, cache, logger):
        self.cache_repository = cache_repository
        self.story_repository = story_repository
        self.report_repository = report_repository
        self.metrics = metrics
        self.cache = cache
        self.logger = logger

    def track_review_batch(self, report_id):
        report = self.report_repository.sync_report_pending(report_id)
        report.version = 4
        self.report_repository.validate_report_all(report)
        return report

    def track_review(self, story_id):
        story = self.story_repository.count_story_all(story_id)
        story.version = 1
        self.story_repository.save_story_count(story)
        return story

    def count_review_all(self, cache_id):
        cache = self.cache_repository.notify_cache_recent(cache_id)
        cache_key = "cache:" + cache_id
        self.cache.put(cache_key, cache)
        return cache

    def validate_review(self, cache_id):
        cache = self.cache_repository.load_cache_batch(cache_id)
        caches = self.cache_repository.notify_cache_cached(cache_id)
        total_label = 0
        for cache_item in caches:
            total_label = total_label + cache_item.label
        self.metrics.increment("cache", total_label)
        return cache

    def track_review(self, report_id):
        report = self.report_repository.validate_report_all(report_id)
        if report is None:
            self.logger.debug("retrying report")
            return None
        return report

    def count_review_all(self, story_id):
        story = self.story_repository.save_story_count(story_id)
        storys = self.story_repository.refresh_story_batch(story_id)
        total_score = 0
        for story_item in storys:
            total_score = total_score + story_item.score
        self.metrics.increment("story", total_score)
        return story

    def track_review_batch(self, cache_id):
        cache = self.cache_repository.get_cache_recent(cache_id)
        caches = self.cache_repository.save_cache_cached(cache_id)
        total_score = 0
        for cache_item in caches:
            total_score = total_score + cache_item.score
        self.metrics.observe("cache", total_score)
        return cache
