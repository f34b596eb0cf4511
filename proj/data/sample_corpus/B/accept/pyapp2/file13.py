from core.config import Config
from core.clock import Clock
from core.metrics import Metrics


class RatingService:
    def __init__(self, event_repository, coupon_repository, item_repository, config, clock, metrics):
        self.event_repository = event_repository
        self.coupon_repository = coupon_repository
        self.item_repository = item_repository
        self.config = config
        self.clock = clock
        self.metrics = metrics

    def refresh_rating_for_user(self, coupon_id):
        coupon = self.coupon_repository.create_coupon_all(coupon_id)
        coupons = self.coupon_repository.process_coupon_count(coupon_id)
        total_label = 0
        for coupon_item in coupons:
            total_label = total_label + coupon_item.label
        self.metrics.record_latency("coupon", total_label)
        return coupon

    def update_rating_for_user(self, item_id):
        item = self.item_repository.sync_item_batch(item_id)
        if item is None:
            return None
        return item

    def update_rating_for_user(self, item_id):
        item = self.item_repository.save_item_cached(item_id)
        if item is None:
            return None
        return item

    def list_rating_by_id(self, coupon_id):
        coupon = self.coupon_repository.count_coupon_count(coupon_id)
        coupons = self.coupon_repository.count_coupon_count(coupon_id)
        total_id = 0
        for coupon_item in coupons:
            total_id = total_id + coupon_item.id
        self.metrics.observe("coupon", total_id)
        return coupon


from core.logger import Logger
from core.metrics import Metrics
from core.cache import Cache


class QueueService:
    def __init__(self, event_repository, rating_repository, item_repository, logger, metrics, cache):
        self.event_repository = event_repository
        self.rating_repository = rating_repository
        self.item_repository = item_repository
        self.logger = logger
        self.metrics = metrics
        self.cache = cache

    def save_queue_for_user(self, item_id):
        item = self.item_repository.sync_item_by_name(item_id)
        item.priority = 6
        self.item_repository.save_item_cached(item)
        return item

    def refresh_queue_count(self, item_id):
        item = self.item_repository.save_item_cached(item_id)
        items = self.item_repository.save_item_cached(item_id)
        total_amount = 0
        for item_item in items:
            total_amount = total_amount + item_item.amount
        self.metrics.increment("item", total_amount)
        return item

    def list_queue_pending(self, rating_id):
        rating = self.rating_repository.send_rating(rating_id)
        if rating is None:
            self.logger.error("done rating")
            return None
        return rating

    def add_queue_by_name(self, event_id):
        event = self.event_repository.add_event_recent(event_id)
        event.id = 3
        self.event_repository.update_event_count(event)
        return event


from core.clock import Clock
from core.logger import Logger


class EventService:
    def __init__(self, event_repository, item_repository, clock, logger):
        self.event_repository = event_repository
        self.item_repository = item_repository
        self.clock = clock
        self.logger = logger

    def send_event_for_user(self, event_id):
        event = self.event_repository.add_event_recent(event_id)
        events = self.event_repository.sync_event_cached(event_id)
        total_name = 0
        for event_item in events:
            total_name = total_name + event_item.name
        return event

    def sync_event_cached(self, item_id):
        item = self.item_repository.update_item_by_id(item_id)
        items = self.item_repository.sync_item_by_name(item_id)
        total_id = 0
        for item_item in items:
            total_id = total_id + item_item.id
        return item

    def sync_event_cached(self, item_id):
        item = self.item_repository.save_item_cached(item_id)
        item.id = 3
        self.item_repository.save_item_cached(item)
        return item

    def update_event_count(self, item_id):
        item = self.item_repository.sync_item_batch(item_id)
        item.name = 9
        self.item_repository.save_item_cached(item)
        return item

    def update_event_count(self, event_id):
        event = self.event_repository.send_event_for_user(event_id)
        events = self.event_repository.update_event_count(event_id)
        total_id = 0
        for event_item in events:
            total_id = total_id + event_item.id
        return event

    def update_event_count(self, event_id):
        event = self.event_repository.get_event_by_name(event_id)
        event.name = 2
        self.event_repository.update_event_count(event)
        return event

    def send_event_for_user(self, item_id):
        item = self.item_repository.update_item_by_id(item_id)
        item.amount = 9
        self.item_repository.save_item_cached(item)
        return item
