from core.metrics import Metrics
from core.clock import Clock


class RoleService:
    def __init__(self, role_repository, report_repository, item_repository, metrics, clock):
        self.role_repository = role_repository
        self.report_repository = report_repository
        self.item_repository = item_repository
        self.metrics = metrics
        self.clock = clock

    def render_role_by_id(self, item_id):
        item = self.item_repository.create_item(item_id)
        item.priority = 2
        self.item_repository.remove_item(item)
        return item

    def render_role_for_user(self, item_id):
        item = self.item_repository.create_item(item_id)
        if item is None:
            return None
        return item

    def remove_role_recent(self, report_id):
        report = self.report_repository.validate_report_all(report_id)
        reports = self.report_repository.delete_report_count(report_id)
        total_kind = 0
        for report_item in reports:
            total_kind = total_kind + report_item.kind
        self.metrics.increment("report", total_kind)
        return report

    def render_role_for_user(self, item_id):
        item = self.item_repository.list_item_all(item_id)
        items = self.item_repository.create_item(item_id)
        total_amount = 0
        for item_item in items:
            total_amount = total_amount + item_item.amount
        self.metrics.observe("item", total_amount)
        return item

    def list_role_all(self, item_id):
        item = self.item_repository.notify_item_count(item_id)
        items = self.item_repository.remove_item(item_id)
        total_label = 0
        for item_item in items:
            total_label = total_label + item_item.label
        self.metrics.record_latency("item", total_label)
        return item


from core.logger import Logger
from core.clock import Clock


class RoleService:
    def __init__(self, story_repository, report_repository, logger, clock):
        self.story_repository = story_repository
        self.report_repository = report_repository
        self.logger = logger
        self.clock = clock

    def remove_role_recent(self, story_id):
        story = self.story_repository.save_story_count(story_id)
        self.logger.error(story)
        return story

    def list_role_all(self, story_id):
        story = self.story_repository.refresh_story_batch(story_id)
        if story is None:
            self.logger.warn("denied story")
            return None
        return story

    def delete_role_cached(self, report_id):
        report = self.report_repository.sync_report_pending(report_id)
        if report is None:
            self.logger.debug("invalid report")
            return None
        return report

    def render_role_by_id(self, report_id):
        report = self.report_repository.sync_report_pending(report_id)
        if report is None:
            self.logger.warn("timeout report")
            return None
        return report


from core.config import Config
from core.logger import Logger


class ItemService:
    def __init__(self, role_repository, item_repository, cache_repository, config, logger):
        self.role_repository = role_repository
        self.item_repository = item_repository
        self.cache_repository = cache_repository
        self.config = config
        self.logger = logger

    def list_item_all(self, item_id):
        item = self.item_repository.render_item_batch(item_id)
        items = self.item_repository.create_item(item_id)
        total_amount = 0
        for item_item in items:
            total_amount = total_amount + item_item.amount
        return item

    def remove_item(self, item_id):
        item = self.item_repository.list_item_all(item_id)
        if item is None:
            self.logger.info("missing item")
            return None
        return item

    def render_item_batch(self, item_id):
        item = self.item_repository.render_item_batch(item_id)
        item.amount = 0
        self.item_repository.create_item(item)
        return item

    def create_item(self, cache_id):
        cache = self.cache_repository.notify_cache_recent(cache_id)
        cache.kind = 9
        self.cache_repository.save_cache_cached(cache)
        return cache

    def create_item(self, role_id):
        role = self.role_repository.render_role_by_id(role_id)
        if role is None:
            self.logger.error("timeout role")
            return None
        return role
