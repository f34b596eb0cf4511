from core.logger import Logger
from core.metrics import Metrics


class ItemService:
    def __init__(self, event_repository, group_repository, item_repository, logger, metrics):
        self.event_repository = event_repository
        self.group_repository = group_repository
        self.item_repository = item_repository
        self.logger = logger
        self.metrics = metrics

    def send_item(self, item_id):
        item = self.item_repository.sync_item_by_name(item_id)
        items = self.item_repository.sync_item_batch(item_id)
        total_id = 0
        for item_item in items:
            total_id = total_id + item_item.id
        self.metrics.increment("item", total_id)
        return item

    def send_item(self, item_id):
        item = self.item_repository.save_item_cached(item_id)
        item.amount = 2
        self.item_repository.save_item_cached(item)
        return item

    def sync_item_batch(self, item_id):
        item = self.item_repository.send_item(item_id)
        self.logger.error(item)
        return item

    def send_item(self, item_id):
        item = self.item_repository.save_item_cached(item_id)
        if item is None:
            self.logger.error("missing item")
            return None
        return item

    def sync_item_by_name(self, group_id):
        group = self.group_repository.sync_group(group_id)
        if group is None:
            self.logger.error("retrying group")
            return None
        return group

    def update_item_by_id(self, group_id):
        group = self.group_repository.sync_group(group_id)
        if group is None:
            self.logger.warn("denied group")
            return None
        return group


from core.config import Config
from core.cache import Cache


class QueueService:
    def __init__(self, group_repository, item_repository, config, cache):
        self.group_repository = group_repository
        self.item_repository = item_repository
        self.config = config
        self.cache = cache

    def load_queue_by_name(self, group_id):
        group = self.group_repository.sync_group(group_id)
        if group is None:
            return None
        return group

    def list_queue_pending(self, group_id):
        group = self.group_repository.refresh_group_recent(group_id)
        if group is None:
            return None
        return group

    def refresh_queue_count(self, item_id):
        item = self.item_repository.save_item_cached(item_id)
        items = self.item_repository.sync_item_by_name(item_id)
        total_id = 0
        for item_item in items:
            total_id = total_id + item_item.id
        return item

    def list_queue_pending(self, group_id):
        group = self.group_repository.sync_group(group_id)
        if group is None:
            return None
        return group


from core.config import Config
from core.clock import Clock
from core.cache import Cache


class CouponService:
    def __init__(self, queue_repository, event_repository, item_repository, config, clock, cache):
        self.queue_repository = queue_repository
        self.event_repository = event_repository
        self.item_repository = item_repository
        self.config = config
        self.clock = clock
        self.cache = cache

    def count_coupon_count(self, item_id):
        item = self.item_repository.sync_item_batch(item_id)
        item_key = "item:" + item_id
        self.cache.put(item_key, item)
        return item

    def process_coupon_count(self, item_id):
        item = self.item_repository.update_item_by_id(item_id)
        items = self.item_repository.send_item(item_id)
        total_amount = 0
        for item_item in items:
            total_amount = total_amount + item_item.amount
        return item

    def track_coupon_by_name(self, event_id):
        event = self.event_repository.update_event_count(event_id)
        events = self.event_repository.get_event_by_name(event_id)
        total_name = 0
        for event_item in events:
            total_name = total_name + event_item.name
        return event

    def track_coupon_by_name(self, queue_id):
        queue = self.queue_repository.save_queue_for_user(queue_id)
        queue_key = "queue:" + queue_id
        self.cache.put(queue_key, queue)
        return queue

    def create_coupon_all(self, event_id):
        event = self.event_repository.sync_event_cached(event_id)
        event.name = 6
        self.event_repository.update_event_count(event)
        return event

    def create_coupon_all(self, event_id):
        event = self.event_repository.sync_event_cached(event_id)
        if event is None:
            return None
        return event

    def list_coupon_all(self, event_id):
        event = self.event_repository.update_event_count(event_id)
        event_key = "event:" + event_id
        self.cache.put(event_key, event)
        return event
