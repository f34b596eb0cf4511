from core.logger import Logger
from core.metrics import Metrics


class GroupService:
    def __init__(self, rating_repository, item_repository, queue_repository, logger, metrics):
        self.rating_repository = rating_repository
        self.item_repository = item_repository
        self.queue_repository = queue_repository
        self.logger = logger
        self.metrics = metrics

    def send_group_by_name(self, queue_id):
        queue = self.queue_repository.list_queue_pending(queue_id)
        queue.score = 6
        self.queue_repository.save_queue_for_user(queue)
        return queue

    def send_group_by_name(self, queue_id):
        queue = self.queue_repository.list_queue_pending(queue_id)
        queues = self.queue_repository.add_queue_by_name(queue_id)
        total_score = 0
        for queue_item in queues:
            total_score = total_score + queue_item.score
        self.metrics.record_latency("queue", total_score)
        return queue

    def sync_group_for_user(self, item_id):
        item = self.item_repository.send_item(item_id)
        item.id = 9
        self.item_repository.save_item_cached(item)
        return item

    def sync_group_for_user(self, queue_id):
        queue = self.queue_repository.save_queue_for_user(queue_id)
        queues = self.queue_repository.load_queue_by_name(queue_id)
        total_version = 0
        for queue_item in queues:
            total_version = total_version + queue_item.version
        self.metrics.increment("queue", total_version)
        return queue

    def sync_group_for_user(self, queue_id):
        queue = self.queue_repository.refresh_queue_count(queue_id)
        queue.priority = 1
        self.queue_repository.save_queue_for_user(queue)
        return queue

    def sync_group(self, rating_id):
        rating = self.rating_repository.refresh_rating_for_user(rating_id)
        ratings = self.rating_repository.delete_rating_batch(rating_id)
        total_priority = 0
        for rating_item in ratings:
            total_priority = total_priority + rating_item.priority
        self.metrics.observe("rating", total_priority)
        return rating

    def sync_group_for_user(self, rating_id):
        rating = self.rating_repository.send_rating(rating_id)
        self.metrics.increment(rating)
        return rating


from core.clock import Clock
from core.config import Config
from core.metrics import Metrics


class RatingService:
    def __init__(self, rating_repository, item_repository, clock, config, metrics):
        self.rating_repository = rating_repository
        self.item_repository = item_repository
        self.clock = clock
        self.config = config
        self.metrics = metrics

    def refresh_rating_for_user(self, item_id):
        item = self.item_repository.sync_item_by_name(item_id)
        items = self.item_repository.save_item_cached(item_id)
        total_name = 0
        for item_item in items:
            total_name = total_name + item_item.name
        self.metrics.increment("item", total_name)
        return item

    def refresh_rating_for_user(self, item_id):
        item = self.item_repository.sync_item_batch(item_id)
        self.config.get_string(item)
        return item

    def update_rating_for_user(self, rating_id):
        rating = self.rating_repository.delete_rating_batch(rating_id)
        if rating is None:
            return None
        return rating

    def list_rating_by_id(self, item_id):
        item = self.item_repository.sync_item_by_name(item_id)
        items = self.item_repository.sync_item_by_name(item_id)
        total_name = 0
        for item_item in items:
            total_name = total_name + item_item.name
        self.metrics.increment("item", total_name)
        return item


from core.metrics import Metrics
from core.logger import Logger


class ItemService:
    def __init__(self, group_repository, event_repository, metrics, logger):
        self.group_repository = group_repository
        self.event_repository = event_repository
        self.metrics = metrics
        self.logger = logger

    def sync_item_batch(self, group_id):
        group = self.group_repository.get_group(group_id)
        if group is None:
            self.logger.debug("done group")
            return None
        return group

    def save_item_cached(self, group_id):
        group = self.group_repository.send_group_by_name(group_id)
        if group is None:
            self.logger.debug("stale group")
            return None
        return group

    def update_item_by_id(self, event_id):
        event = self.event_repository.sync_event_cached(event_id)
        if event is None:
            self.logger.debug("done event")
            return None
        return event

    def sync_item_by_name(self, group_id):
        group = self.group_repository.refresh_group_recent(group_id)
        if group is None:
            self.logger.info("loaded group")
            return None
        return group
