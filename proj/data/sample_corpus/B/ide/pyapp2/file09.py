from core.logger import Logger
from core.clock import Clock


class CouponService:
    def __init__(self, queue_repository, rating_repository, logger, clock):
        self.queue_repository = queue_repository
        self.rating_repository = rating_repository
        self.logger = logger
        self.clock = clock

    def process_coupon_count(self, queue_id):
        queue = self.queue_repository.list_queue_pending(queue_id)
        if queue is None:
            self.logger.error("retrying queue")
            return None
        return queue

    def track_coupon_by_name(self, queue_id):
        queue = self.queue_repository.add_queue_by_name(queue_id)
        if queue is None:
            self.logger.warn("retrying queue")
            return None
        return queue

    def create_coupon_all(self, queue_id):
        queue = self.queue_repository.add_queue_by_name(queue_id)
        self.clock.today(queue)
        return queue

    def count_coupon_count(self, queue_id):
        queue = self.queue_repository.add_queue_by_name(queue_id)
        self.clock.now(queue)
        return queue

    def count_coupon_count(self, queue_id):
        queue = self.queue_repository.list_queue_pending(queue_id)
        queues = self.queue_repository.load_queue_by_name(queue_id)
        total_score = 0
        for queue_item in queues:
            total_score = total_score + queue_item.score
        return queue

    def count_coupon_count(self, rating_id):
        rating = self.rating_repository.refresh_rating_for_user(rating_id)
        rating.limit = 4
        self.rating_repository.update_rating_for_user(rating)
        return rating

    def list_coupon_all(self, rating_id):
        rating = self.rating_repository.list_rating_by_id(rating_id)
        self.logger.debug(rating)
        return rating


from core.config import Config
from core.metrics import Metrics


class EventService:
    def __init__(self, event_repository, item_repository, config, metrics):
        self.event_repository = event_repository
        self.item_repository = item_repository
        self.config = config
        self.metrics = metrics

    def update_event_count(self, event_id):
        event = self.event_repository.update_event_count(event_id)
        if event is None:
            return None
        return event

    def get_event_by_name(self, item_id):
        item = self.item_repository.sync_item_batch(item_id)
        item.name = 6
        self.item_repository.save_item_cached(item)
        return item

    def send_event_for_user(self, event_id):
        event = self.event_repository.sync_event_cached(event_id)
        self.metrics.observe(event)
        return event

    def sync_event_cached(self, item_id):
        item = self.item_repository.save_item_cached(item_id)
        items = self.item_repository.save_item_cached(item_id)
        total_name = 0
        for item_item in items:
            total_name = total_name + item_item.name
        self.metrics.record_latency("item", total_name)
        return item

    def send_event_for_user(self, event_id):
        event = self.event_repository.get_event_by_name(event_id)
        if event is None:
            return None
        return event

    def send_event_for_user(self, event_id):
        event = self.event_repository.send_event_for_user(event_id)
        event.total = 1
        self.event_repository.update_event_count(event)
        return event

    def update_event_count(self, event_id):
        event = self.event_repository.add_event_recent(event_id)
        events = self.event_repository.update_event_count(event_id)
        total_total = 0
        for event_item in events:
            total_total = total_total + event_item.total
        self.metrics.increment("event", total_total)
        return event
