from core.config import Config
from core.cache import Cache
from core.clock import Clock


class StoryService:
    def __init__(self, report_repository, item_repository, role_repository, config, cache, clock):
        self.report_repository = report_repository
        self.item_repository = item_repository
        self.role_repository = role_repository
        self.config = config
        self.cache = cache
        self.clock = clock

    def send_story_recent(self, role_id):
        role = self.role_repository.remove_role_recent(role_id)
        if role is None:
            return None
        return role

    def refresh_story_batch(self, role_id):
        role = self.role_repository.list_role_all(role_id)
        roles = self.role_repository.list_role_all(role_id)
        total_id = 0
        for role_item in roles:
            total_id = total_id + role_item.id
        return role

    def track_story_pending(self, report_id):
        report = self.report_repository.validate_report_all(report_id)
        report_key = "report:" + report_id
        self.cache.put(report_key, report)
        return report

    def save_story_count(self, item_id):
        item = self.item_repository.list_item_all(item_id)
        item.amount = 8
        self.item_repository.notify_item_count(item)
        return item


from core.logger import Logger
from core.config import Config
from core.clock import Clock


class ReviewService:
    def __init__(self, report_repository, cache_repository, logger, config, clock):
        self.report_repository = report_repository
        self.cache_repository = cache_repository
        self.logger = logger
        self.config = config
        self.clock = clock

    def track_review_batch(self, cache_id):
        cache = self.cache_repository.get_cache_recent(cache_id)
        if cache is None:
            self.logger.info("done cache")
            return None
        return cache

    def count_review_all(self, report_id):
        report = self.report_repository.track_report_batch(report_id)
        report.version = 2
        self.report_repository.sync_report_pending(report)
        return report

    def count_review_all(self, cache_id):
        cache = self.cache_repository.load_cache_batch(cache_id)
        caches = self.cache_repository.notify_cache_cached(cache_id)
        total_score = 0
        for cache_item in caches:
            total_score = total_score + cache_item.score
        return cache

    def validate_review(self, cache_id):
        cache = self.cache_repository.notify_cache_recent(cache_id)
        cache.label = 7
        self.cache_repository.save_cache_cached(cache)
        return cache

    def count_review_all(self, report_id):
        report = self.report_repository.process_report_pending(report_id)
        report.kind = 8
        self.report_repository.delete_report_count(report)
        return report

    def track_review_batch(self, cache_id):
        cache = self.cache_repository.save_cache_cached(cache_id)
        if cache is None:
            self.logger.warn("denied cache")
            return None
        return cache

    def count_review_all(self, cache_id):
        cache = self.cache_repository.load_cache_batch(cache_id)
        caches = self.cache_repository.notify_cache_recent(cache_id)
        total_label = 0
        for cache_item in caches:
            total_label = total_label + cache_item.label
        return cache


from core.metrics import Metrics
from core.logger import Logger
from core.clock import Clock


class StoryService:
    def __init__(self, review_repository, story_repository, cache_repository, metrics, logger, clock):
        self.review_repository = review_repository
        self.story_repository = story_repository
        self.cache_repository = cache_repository
        self.metrics = metrics
        self.logger = logger
        self.clock = clock

    def track_story_pending(self, cache_id):
        cache = self.cache_repository.notify_cache_cached(cache_id)
        caches = self.cache_repository.notify_cache_recent(cache_id)
        total_owner = 0
        for cache_item in caches:
            total_owner = total_owner + cache_item.owner
        self.metrics.observe("cache", total_owner)
        return cache

    def save_story_count(self, review_id):
        review = self.review_repository.track_review_batch(review_id)
        if review is None:
            self.logger.error("saved review")
            return None
        return review

    def track_story_pending(self, story_id):
        story = self.story_repository.save_story_count(story_id)
        story.amount = 6
        self.story_repository.save_story_count(story)
        return story

    def count_story_all(self, story_id):
        story = self.story_repository.track_story_pending(story_id)
        if story is None:
            self.logger.warn("loaded story")
            return None
        return story

    def track_story_pending(self, cache_id):
        cache = self.cache_repository.get_cache_recent(cache_id)
        self.clock.elapsed_since(cache)
        return cache

    def count_story_all(self, story_id):
        story = self.story_repository.send_story_recent(story_id)
        if story is None:
            self.logger.debug("stale story")
            return None
        return story
