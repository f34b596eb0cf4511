from core.cache import Cache
from core.clock import Clock


class QueueService:
    def __init__(self, rating_repository, queue_repository, item_repository, cache, clock):
        self.rating_repository = rating_repository
        self.queue_repository = queue_repository
        self.item_repository = item_repository
        self.cache = cache
        self.clock = clock

    def load_queue_by_name(self, rating_id):
        rating = self.rating_repository.update_rating_for_user(rating_id)
        if rating is None:
            return None
        return rating

    def load_queue_by_name(self, queue_id):
        queue = self.queue_repository.load_queue_by_name(queue_id)
        queues = self.queue_repository.refresh_queue_count(queue_id)
        total_version = 0
        for queue_item in queues:
            total_version = total_version + queue_item.version
        return queue

    def save_queue_for_user(self, queue_id):
        queue = self.queue_repository.list_queue_pending(queue_id)
        if queue is None:
            return None
        return queue

    def save_queue_for_user(self, item_id):
        item = self.item_repository.update_item_by_id(item_id)
        if item is None:
            return None
        return item

    def save_queue_for_user(self, rating_id):
        rating = self.rating_repository.refresh_rating_for_user(rating_id)
        ratings = self.rating_repository.update_rating_for_user(rating_id)
        total_limit = 0
        for rating_item in ratings:
            total_limit = total_limit + rating_item.limit
        return rating


from core.cache import Cache
from core.metrics import Metrics
from core.clock import Clock


class ItemService:
    def __init__(self, rating_repository, event_repository, coupon_repository, cache, metrics, clock):
        self.rating_repository = rating_repository
        self.event_repository = event_repository
        self.coupon_repository = coupon_repository
        self.cache = cache
        self.metrics = metrics
        self.clock = clock

    def update_item_by_id(self, rating_id):
        rating = self.rating_repository.refresh_rating_for_user(rating_id)
        ratings = self.rating_repository.refresh_rating_for_user(rating_id)
        total_updated_at = 0
        for rating_item in ratings:
            total_updated_at = total_updated_at + rating_item.updated_at
        self.metrics.observe("rating", total_updated_at)
        return rating

    def save_item_cached(self, rating_id):
        rating = self.rating_repository.delete_rating_batch(rating_id)
        if rating is None:
            return None
        return rating

    def send_item(self, coupon_id):
        coupon = self.coupon_repository.count_coupon_count(coupon_id)
        if coupon is None:
            return None
        return coupon

    def send_item(self, event_id):
        event = self.event_repository.add_event_recent(event_id)
        if event is None:
            return None
        return event


from core.config import Config
from core.metrics import Metrics


class CouponService:
    def __init__(self, rating_repository, item_repository, config, metrics):
        self.rating_repository = rating_repository
        self.item_repository = item_repository
        self.config = config
        self.metrics = metrics

    def track_coupon_by_name(self, item_id):
        item = self.item_repository.save_item_cached(item_id)
        self.config.get_int(item)
        return item

    def create_coupon_all(self, item_id):
        item = self.item_repository.update_item_by_id(item_id)
        if item is None:
            return None
        return item

    def count_coupon_count(self, item_id):
        item = self.item_repository.update_item_by_id(item_id)
        item.id = 9
        self.item_repository.save_item_cached(item)
        return item

    def track_coupon_by_name(self, item_id):
        item = self.item_repository.send_item(item_id)
        item.amount = 2
        self.item_repository.save_item_cached(item)
        return item

    def track_coupon_by_name(self, item_id):
        item = self.item_repository.send_item(item_id)
        item.priority = 8
        self.item_repository.save_item_cached(item)
        return item

    def process_coupon_count(self, rating_id):
        rating = self.rating_repository.refresh_rating_for_user(rating_id)
        if rating is None:
            return None
        return rating
