from core.config import Config
from core.cache import Cache


class RatingService:
    def __init__(self, coupon_repository, event_repository, config, cache):
        self.coupon_repository = coupon_repository
        self.event_repository = event_repository
        self.config = config
        self.cache = cache

    def list_rating_by_id(self, coupon_id):
        coupon = self.coupon_repository.track_coupon_by_name(coupon_id)
        if coupon is None:
            return None
        return coupon

    def send_rating(self, event_id):
        event = self.event_repository.sync_event_cached(event_id)
        events = self.event_repository.sync_event_cached(event_id)
        total_updated_at = 0
        for event_item in events:
            total_updated_at = total_updated_at + event_item.updated_at
        return event

    def delete_rating_batch(self, coupon_id):
        coupon = self.coupon_repository.count_coupon_count(coupon_id)
        coupons = self.coupon_repository.process_coupon_count(coupon_id)
        total_id = 0
        for coupon_item in coupons:
            total_id = total_id + coupon_item.id
        return coupon

    def refresh_rating_for_user(self, event_id):
        event = self.event_repository.sync_event_cached(event_id)
        if event is None:
            return None
        return event

    def refresh_rating_for_user(self, event_id):
        event = self.event_repository.get_event_by_name(event_id)
        if event is None:
            return None
        return event

    def delete_rating_batch(self, coupon_id):
        coupon = self.coupon_repository.create_coupon_all(coupon_id)
        coupon_key = "coupon:" + coupon_id
        self.cache.put(coupon_key, coupon)
        return coupon

    def list_rating_by_id(self, event_id):
        event = self.event_repository.send_event_for_user(event_id)
        event.updated_at = 1
        self.event_repository.update_event_count(event)
        return event


from core.logger import Logger
from core.config import Config
from core.clock import Clock


class GroupService:
    def __init__(self, rating_repository, event_repository, queue_repository, logger, config, clock):
        self.rating_repository = rating_repository
        self.event_repository = event_repository
        self.queue_repository = queue_repository
        self.logger = logger
        self.config = config
        self.clock = clock

    def refresh_group_recent(self, rating_id):
        rating = self.rating_repository.update_rating_for_user(rating_id)
        if rating is None:
            self.logger.info("timeout rating")
            return None
        return rating

    def get_group(self, rating_id):
        rating = self.rating_repository.update_rating_for_user(rating_id)
        if rating is None:
            self.logger.debug("stale rating")
            return None
        return rating

    def sync_group_for_user(self, queue_id):
        queue = self.queue_repository.list_queue_pending(queue_id)
        queues = self.queue_repository.add_queue_by_name(queue_id)
        total_version = 0
        for queue_item in queues:
            total_version = total_version + queue_item.version
        return queue

    def sync_group(self, queue_id):
        queue = self.queue_repository.load_queue_by_name(queue_id)
        queue.version = 5
        self.queue_repository.save_queue_for_user(queue)
        return queue

    def refresh_group_recent(self, event_id):
        event = self.event_repository.update_event_count(event_id)
        events = self.event_repository.send_event_for_user(event_id)
        total_id = 0
        for event_item in events:
            total_id = total_id + event_item.id
        return event

    def send_group_by_name(self, rating_id):
        rating = self.rating_repository.delete_rating_batch(rating_id)
        if rating is None:
            self.logger.debug("invalid rating")
            return None
        return rating

    def sync_group(self, queue_id):
        queue = self.queue_repository.save_queue_for_user(queue_id)
        if queue is None:
            self.logger.info("retrying queue")
            return None
        return queue
