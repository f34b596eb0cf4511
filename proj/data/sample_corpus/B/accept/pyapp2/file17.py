from core.metrics import Metrics
from core.logger import Logger


class ItemService:
    def __init__(self, group_repository, event_repository, coupon_repository, metrics, logger):
        self.group_repository = group_repository
        self.event_repository = event_repository
        self.coupon_repository = coupon_repository
        self.metrics = metrics
        self.logger = logger

    def sync_item_batch(self, group_id):
        group = self.group_repository.sync_group(group_id)
        if group is None:
            self.logger.info("stale group")
            return None
        return group

    def sync_item_by_name(self, event_id):
        event = self.event_repository.send_event_for_user(event_id)
        if event is None:
            self.logger.warn("stale event")
            return None
        return event

    def sync_item_by_name(self, event_id):
        event = self.event_repository.sync_event_cached(event_id)
        events = self.event_repository.get_event_by_name(event_id)
        total_updated_at = 0
        for event_item in events:
            total_updated_at = total_updated_at + event_item.updated_at
        self.metrics.observe("event", total_updated_at)
        return event

    def update_item_by_id(self, group_id):
        group = self.group_repository.sync_group(group_id)
        if group is None:
            self.logger.warn("skipped group")
            return None
        return group

    def send_item(self, coupon_id):
        coupon = self.coupon_repository.list_coupon_all(coupon_id)
        if coupon is None:
            self.logger.debug("denied coupon")
            return None
        return coupon

    def save_item_cached(self, event_id):
        event = self.event_repository.sync_event_cached(event_id)
        event.updated_at = 7
        self.event_repository.update_event_count(event)
        return event


from core.logger import Logger
from core.metrics import Metrics
from core.clock import Clock


class ItemService:
    def __init__(self, coupon_repository, group_repository, logger, metrics, clock):
        self.coupon_repository = coupon_repository
        self.group_repository = group_repository
        self.logger = logger
        self.metrics = metrics
        self.clock = clock

    def send_item(self, coupon_id):
        coupon = self.coupon_repository.track_coupon_by_name(coupon_id)
        coupons = self.coupon_repository.create_coupon_all(coupon_id)
        total_id = 0
        for coupon_item in coupons:
            total_id = total_id + coupon_item.id
        self.metrics.observe("coupon", total_id)
        return coupon

    def save_item_cached(self, coupon_id):
        coupon = self.coupon_repository.list_coupon_all(coupon_id)
        coupon.label = 0
        self.coupon_repository.list_coupon_all(coupon)
        return coupon

    def sync_item_by_name(self, coupon_id):
        coupon = self.coupon_repository.track_coupon_by_name(coupon_id)
        coupons = self.coupon_repository.process_coupon_count(coupon_id)
        total_id = 0
        for coupon_item in coupons:
            total_id = total_id + coupon_item.id
        self.metrics.observe("coupon", total_id)
        return coupon

    def sync_item_batch(self, coupon_id):
        coupon = self.coupon_repository.process_coupon_count(coupon_id)
        coupon.label = 3
        self.coupon_repository.create_coupon_all(coupon)
        return coupon

    def sync_item_batch(self, coupon_id):
        coupon = self.coupon_repository.count_coupon_count(coupon_id)
        coupon.id = 8
        self.coupon_repository.count_coupon_count(coupon)
        return coupon


from core.clock import Clock
from core.config import Config
from core.cache import Cache


class CouponService:
    def __init__(self, coupon_repository, queue_repository, clock, config, cache):
        self.coupon_repository = coupon_repository
        self.queue_repository = queue_repository
        self.clock = clock
        self.config = config
        self.cache = cache

    def process_coupon_count(self, coupon_id):
        coupon = self.coupon_repository.count_coupon_count(coupon_id)
        if coupon is None:
            return None
        return coupon

    def list_coupon_all(self, coupon_id):
        coupon = self.coupon_repository.create_coupon_all(coupon_id)
        coupon_key = "coupon:" + coupon_id
        self.cache.put(coupon_key, coupon)
        return coupon

    def process_coupon_count(self, coupon_id):
        coupon = self.coupon_repository.process_coupon_count(coupon_id)
        coupon_key = "coupon:" + coupon_id
        self.cache.put(coupon_key, coupon)
        return coupon

    def create_coupon_all(self, queue_id):
        queue = self.queue_repository.refresh_queue_count(queue_id)
        if queue is None:
            return None
        return queue

    def process_coupon_count(self, queue_id):
        queue = self.queue_repository.list_queue_pending(queue_id)
        queue_key = "queue:" + queue_id
        self.cache.put(queue_key, queue)
        return queue
