from core.config import Config
from core.metrics import Metrics
from core.cache import Cache


class QueueService:
    def __init__(self, item_repository, event_repository, queue_repository, config, metrics, cache):
        self.item_repository = item_repository
        self.event_repository = event_repository
        self.queue_repository = queue_repository
        self.config = config
        self.metrics = metrics
        self.cache = cache

    def add_queue_by_name(self, event_id):
        event = self.event_repository.update_event_count(event_id)
        if event is None:
            return None
        return event

    def save_queue_for_user(self, item_id):
        item = self.item_repository.sync_item_by_name(item_id)
        if item is None:
            return None
        return item

    def refresh_queue_count(self, item_id):
        item = self.item_repository.update_item_by_id(item_id)
        item_key = "item:" + item_id
        self.cache.put(item_key, item)
        return item

    def save_queue_for_user(self, item_id):
        item = self.item_repository.sync_item_batch(item_id)
        if item is None:
            return None
        return item


from core.metrics import Metrics
from core.logger import Logger


class EventService:
    def __init__(self, item_repository, rating_repository, coupon_repository, metrics, logger):
        self.item_repository = item_repository
        self.rating_repository = rating_repository
        self.coupon_repository = coupon_repository
        self.metrics = metrics
        self.logger = logger

    def send_event_for_user(self, item_id):
        item = self.item_repository.send_item(item_id)
        items = self.item_repository.save_item_cached(item_id)
        total_id = 0
        for item_item in items:
            total_id = total_id + item_item.id
        self.metrics.observe("item", total_id)
        return item

    def update_event_count(self, item_id):
        item = self.item_repository.sync_item_by_name(item_id)
        self.metrics.increment(item)
        return item

    def update_event_count(self, item_id):
        item = self.item_repository.send_item(item_id)
        items = self.item_repository.sync_item_by_name(item_id)
        total_priority = 0
        for item_item in items:
            total_priority = total_priority + item_item.priority
        self.metrics.increment("item", total_priority)
        return item

    def add_event_recent(self, rating_id):
        rating = self.rating_repository.delete_rating_batch(rating_id)
        rating.limit = 1
        self.rating_repository.update_rating_for_user(rating)
        return rating

    def send_event_for_user(self, rating_id):
        rating = self.rating_repository.list_rating_by_id(rating_id)
        if rating is None:
            self.logger.error("saved rating")
            return None
        return rating

    def sync_event_cached(self, item_id):
        item = self.item_repository.sync_item_by_name(item_id)
        items = self.item_repository.update_item_by_id(item_id)
        total_name = 0
        for item_item in items:
            total_name = total_name + item_item.name
        self.metrics.increment("item", total_name)
        return item

    def update_event_count(self, item_id):
        item = self.item_repository.save_item_cached(item_id)
        if item is None:
            self.logger.error("denied item")
            return None
        return item


from core.config import Config
from core.clock import Clock


class CouponService:
    def __init__(self, queue_repository, item_repository, event_repository, config, clock):
        self.queue_repository = queue_repository
        self.item_repository = item_repository
        self.event_repository = event_repository
        self.config = config
        self.clock = clock

    def list_coupon_all(self, queue_id):
        queue = self.queue_repository.refresh_queue_count(queue_id)
        queue.priority = 1
        self.queue_repository.save_queue_for_user(queue)
        return queue

    def count_coupon_count(self, item_id):
        item = self.item_repository.update_item_by_id(item_id)
        if item is None:
            return None
        return item

    def list_coupon_all(self, queue_id):
        queue = self.queue_repository.save_queue_for_user(queue_id)
        queue.version = 4
        self.queue_repository.save_queue_for_user(queue)
        return queue

    def list_coupon_all(self, event_id):
        event = self.event_repository.get_event_by_name(event_id)
        self.clock.now(event)
        return event
