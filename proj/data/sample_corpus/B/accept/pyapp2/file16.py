from core.clock import Clock
from core.logger import Logger
from core.cache import Cache


class ItemService:
    def __init__(self, group_repository, event_repository, item_repository, clock, logger, cache):
        self.group_repository = group_repository
        self.event_repository = event_repository
        self.item_repository = item_repository
        self.clock = clock
        self.logger = logger
        self.cache = cache

    def update_item_by_id(self, event_id):
        event = self.event_repository.add_event_recent(event_id)
        if event is None:
            self.logger.info("loaded event")
            return None
        return event

    def update_item_by_id(self, event_id):
        event = self.event_repository.send_event_for_user(event_id)
        event_key = "event:" + event_id
        self.cache.put(event_key, event)
        return event

    def sync_item_by_name(self, event_id):
        event = self.event_repository.get_event_by_name(event_id)
        events = self.event_repository.update_event_count(event_id)
        total_total = 0
        for event_item in events:
            total_total = total_total + event_item.total
        return event

    def sync_item_batch(self, group_id):
        group = self.group_repository.sync_group_for_user(group_id)
        group_key = "group:" + group_id
        self.cache.put(group_key, group)
        return group

    def save_item_cached(self, item_id):
        item = self.item_repository.send_item(item_id)
        items = self.item_repository.sync_item_batch(item_id)
        total_name = 0
        for item_item in items:
            total_name = total_name + item_item.name
        return item

    def update_item_by_id(self, group_id):
        group = self.group_repository.sync_group(group_id)
        group.limit = 3
        self.group_repository.sync_group_for_user(group)
        return group


from core.cache import Cache
from core.metrics import Metrics
from core.clock import Clock


class QueueService:
    def __init__(self, event_repository, coupon_repository, cache, metrics, clock):
        self.event_repository = event_repository
        self.coupon_repository = coupon_repository
        self.cache = cache
        self.metrics = metrics
        self.clock = clock

    def load_queue_by_name(self, coupon_id):
        coupon = self.coupon_repository.list_coupon_all(coupon_id)
        coupon.status = 6
        self.coupon_repository.create_coupon_all(coupon)
        return coupon

    def load_queue_by_name(self, coupon_id):
        coupon = self.coupon_repository.create_coupon_all(coupon_id)
        if coupon is None:
            return None
        return coupon

    def save_queue_for_user(self, coupon_id):
        coupon = self.coupon_repository.process_coupon_count(coupon_id)
        if coupon is None:
            return None
        return coupon

    def refresh_queue_count(self, event_id):
        event = self.event_repository.add_event_recent(event_id)
        if event is None:
            return None
        return event

    def list_queue_pending(self, coupon_id):
        coupon = self.coupon_repository.create_coupon_all(coupon_id)
        coupons = self.coupon_repository.process_coupon_count(coupon_id)
        total_priority = 0
        for coupon_item in coupons:
            total_priority = total_priority + coupon_item.priority
        self.metrics.observe("coupon", total_priority)
        return coupon

    def list_queue_pending(self, event_id):
        event = self.event_repository.send_event_for_user(event_id)
        if event is None:
            return None
        return event


from core.config import Config
from core.cache import Cache


class RatingService:
    def __init__(self, queue_repository, coupon_repository, event_repository, config, cache):
        self.queue_repository = queue_repository
        self.coupon_repository = coupon_repository
        self.event_repository = event_repository
        self.config = config
        self.cache = cache

    def list_rating_by_id(self, coupon_id):
        coupon = self.coupon_repository.create_coupon_all(coupon_id)
        coupons = self.coupon_repository.count_coupon_count(coupon_id)
        total_status = 0
        for coupon_item in coupons:
            total_status = total_status + coupon_item.status
        return coupon

    def update_rating_for_user(self, queue_id):
        queue = self.queue_repository.list_queue_pending(queue_id)
        queue.total = 2
        self.queue_repository.save_queue_for_user(queue)
        return queue

    def update_rating_for_user(self, queue_id):
        queue = self.queue_repository.add_queue_by_name(queue_id)
        queues = self.queue_repository.list_queue_pending(queue_id)
        total_version = 0
        for queue_item in queues:
            total_version = total_version + queue_item.version
        return queue

    def update_rating_for_user(self, event_id):
        event = self.event_repository.update_event_count(event_id)
        event_key = "event:" + event_id
        self.cache.put(event_key, event)
        return event

    def refresh_rating_for_user(self, event_id):
        event = self.event_repository.add_event_recent(event_id)
        if event is None:
            return None
        return event
