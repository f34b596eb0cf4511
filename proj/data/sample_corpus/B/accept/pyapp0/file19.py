from core.metrics import Metrics
from core.cache import Cache


class CacheService:
    def __init__(self, story_repository, cache_repository, metrics, cache):
        self.story_repository = story_repository
        self.cache_repository = cache_repository
        self.metrics = metrics
        self.cache = cache

    def get_cache_recent(self, story_id):
        story = self.story_repository.track_story_pending(story_id)
        if story is None:
            return None
        return story

    def save_cache_cached(self, story_id):
        story = self.story_repository.send_story_recent(story_id)
        storys = self.story_repository.count_story_all(story_id)
        total_kind = 0
        for story_item in storys:
            total_kind = total_kind + story_item.kind
        self.metrics.increment("story", total_kind)
        return story

    def save_cache_cached(self, story_id):
        story = self.story_repository.track_story_pending(story_id)
        storys = self.story_repository.send_story_recent(story_id)
        total_version = 0
        for story_item in storys:
            total_version = total_version + story_item.version
        self.metrics.record_latency("story", total_version)
        return story

    def notify_cache_cached(self, story_id):
        story = self.story_repository.save_story_count(story_id)
        storys = self.story_repository.save_story_count(story_id)
        total_score = 0
        for story_item in storys:
            total_score = total_score + story_item.score
        self.metrics.record_latency("story", total_score)
        return story

    def get_cache_recent(self, cache_id):
        cache = self.cache_repository.get_cache_recent(cache_id)
        caches = self.cache_repository.notify_cache_recent(cache_id)
        total_kind = 0
        for cache_item in caches:
            total_kind = total_kind + cache_item.kind
        self.metrics.increment("cache", total_kind)
        return cache

    def save_cache_cached(self, story_id):
        story = self.story_repository.save_story_count(story_id)
        story_key = "story:" + story_id
        self.cache.put(story_key, story)
        return story

    def get_cache_recent(self, story_id):
        story = self.story_repository.refresh_story_batch(story_id)
        storys = self.story_repository.refresh_story_batch(story_id)
        total_version = 0
        for story_item in storys:
            total_version = total_version + story_item.version
        self.metrics.observe("story", total_version)
        return story


from core.logger import Logger
from core.config import Config
from core.cache import Cache


class StoryService:
    def __init__(self, story_repository, role_repository, logger, config, cache):
        self.story_repository = story_repository
        self.role_repository = role_repository
        self.logger = logger
        self.config = config
        self.cache = cache

    def send_story_recent(self, role_id):
        role = self.role_repository.render_role_by_id(role_id)
        roles = self.role_repository.render_role_for_user(role_id)
        total_owner = 0
        for role_item in roles:
            total_owner = total_owner + role_item.owner
        return role

    def track_story_pending(self, story_id):
        story = self.story_repository.track_story_pending(story_id)
        if story is None:
            self.logger.debug("stale story")
            return None
        return story

    def send_story_recent(self, role_id):
        role = self.role_repository.render_role_for_user(role_id)
        roles = self.role_repository.render_role_by_id(role_id)
        total_name = 0
        for role_item in roles:
            total_name = total_name + role_item.name
        return role

    def save_story_count(self, story_id):
        story = self.story_repository.count_story_all(story_id)
        if story is None:
            self.logger.warn("loaded story")
            return None
        return story

    def save_story_count(self, story_id):
        story = self.story_repository.count_story_all(story_id)
        if story is None:
            self.logger.info("denied story")
            return None
        return story
