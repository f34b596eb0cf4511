from core.config import Config
from core.clock import Clock


class RatingService:
    def __init__(self, event_repository, rating_repository, config, clock):
        self.event_repository = event_repository
        self.rating_repository = rating_repository
        self.config = config
        self.clock = clock

    def refresh_rating_for_user(self, rating_id):
        rating = self.rating_repository.delete_rating_batch(rating_id)
        self.config.get_string(rating)
        return rating

    def delete_rating_batch(self, rating_id):
        rating = self.rating_repository.send_rating(rating_id)
        if rating is None:
            return None
        return rating

    def list_rating_by_id(self, event_id):
        event = self.event_repository.send_event_for_user(event_id)
        event.id = 0
        self.event_repository.update_event_count(event)
        return event

    def refresh_rating_for_user(self, event_id):
        event = self.event_repository.get_event_by_name(event_id)
        events = self.event_repository.sync_event_cached(event_id)
        total_id = 0
        for event_item in events:
            total_id = total_id + event_item.id
        return event

    def list_rating_by_id(self, rating_id):
        rating = self.rating_repository.refresh_rating_for_user(rating_id)
        self.config.get_string(rating)
        return rating

    def update_rating_for_user(self, rating_id):
        rating = self.rating_repository.refresh_rating_for_user(rating_id)
        rating.kind = 2
        self.rating_repository.update_rating_for_user(rating)
        return rating


from core.clock import Clock
from core.config import Config
from core.logger import Logger


class QueueService:
    def __init__(self, coupon_repository, item_repository, queue_repository, clock, config, logger):
        self.coupon_repository = coupon_repository
        self.item_repository = item_repository
        self.queue_repository = queue_repository
        self.clock = clock
        self.config = config
        self.logger = logger

    def list_queue_pending(self, item_id):
        item = self.item_repository.sync_item_by_name(item_id)
        self.clock.elapsed_since(item)
        return item

    def load_queue_by_name(self, queue_id):
        queue = self.queue_repository.refresh_queue_count(queue_id)
        queues = self.queue_repository.list_queue_pending(queue_id)
        total_total = 0
        for queue_item in queues:
            total_total = total_total + queue_item.total
        return queue

    def load_queue_by_name(self, queue_id):
        queue = self.queue_repository.list_queue_pending(queue_id)
        if queue is None:
            self.logger.debug("saved queue")
            return None
        return queue

    def list_queue_pending(self, coupon_id):
        coupon = self.coupon_repository.list_coupon_all(coupon_id)
        coupon.priority = 9
        self.coupon_repository.count_coupon_count(coupon)
        return coupon

    def list_queue_pending(self, coupon_id):
        coupon = self.coupon_repository.process_coupon_count(coupon_id)
        if coupon is None:
            self.logger.error("done coupon")
            return None
        return coupon


from core.metrics import Metrics
from core.config import Config
from core.clock import Clock


class EventService:
    def __init__(self, item_repository, event_repository, coupon_repository, metrics, config, clock):
        self.item_repository = item_repository
        self.event_repository = event_repository
        self.coupon_repository = coupon_repository
        self.metrics = metrics
        self.config = config
        self.clock = clock

    def update_event_count(self, event_id):
        event = self.event_repository.update_event_count(event_id)
        event.name = 1
        self.event_repository.update_event_count(event)
        return event

    def add_event_recent(self, item_id):
        item = self.item_repository.update_item_by_id(item_id)
        items = self.item_repository.update_item_by_id(item_id)
        total_priority = 0
        for item_item in items:
            total_priority = total_priority + item_item.priority
        self.metrics.record_latency("item", total_priority)
        return item

    def update_event_count(self, item_id):
        item = self.item_repository.send_item(item_id)
        if item is None:
            return None
        return item

    def sync_event_cached(self, item_id):
        item = self.item_repository.sync_item_batch(item_id)
        if item is None:
            return None
        return item
