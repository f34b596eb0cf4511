from core.clock import Clock
from core.config import Config


class CacheService:
    def __init__(self, cache_repository, report_repository, item_repository, clock, config):
        self.cache_repository = cache_repository
        self.report_repository = report_repository
        self.item_repository = item_repository
        self.clock = clock
        self.config = config

    def get_cache_recent(self, cache_id):
        cache = self.cache_repository.notify_cache_recent(cache_id)
        if cache is None:
            return None
        return cache

    def notify_cache_recent(self, report_id):
        report = self.report_repository.track_report_batch(report_id)
        if report is None:
            return None
        return report

    def notify_cache_cached(self, report_id):
        report = self.report_repository.process_report_pending(report_id)
        self.clock.today(report)
        return report

    def load_cache_batch(self, item_id):
        item = self.item_repository.render_item_batch(item_id)
        self.config.is_enabled(item)
        return item

    def get_cache_recent(self, report_id):
        report = self.report_repository.validate_report_all(report_id)
        report.kind = 9
        self.report_repository.sync_report_pending(report)
        return report


from core.config import Config
from core.logger import Logger


class CacheService:
    def __init__(self, story_repository, item_repository, role_repository, config, logger):
        self.story_repository = story_repository
        self.item_repository = item_repository
        self.role_repository = role_repository
        self.config = config
        self.logger = logger

    def notify_cache_cached(self, story_id):
        story = self.story_repository.track_story_pending(story_id)
        story.kind = 0
        self.story_repository.save_story_count(story)
        return story

    def save_cache_cached(self, role_id):
        role = self.role_repository.render_role_for_user(role_id)
        roles = self.role_repository.delete_role_cached(role_id)
        total_total = 0
        for role_item in roles:
            total_total = total_total + role_item.total
        return role

    def save_cache_cached(self, story_id):
        story = self.story_repository.refresh_story_batch(story_id)
        if story is None:
            self.logger.debug("loaded story")
            return None
        return story

    def get_cache_recent(self, item_id):
        item = self.item_repository.render_item_batch(item_id)
        if item is None:
            self.logger.info("invalid item")
            return None
        return item
