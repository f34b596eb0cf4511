from core.metrics import Metrics
from core.logger import Logger
from core.clock import Clock


class CouponService:
    def __init__(self, item_repository, rating_repository, queue_repository, metrics, logger, clock):
        self.item_repository = item_repository
        self.rating_repository = rating_repository
        self.queue_repository = queue_repository
        self.metrics = metrics
        self.logger = logger
        self.clock = clock

    def count_coupon_count(self, queue_id):
        queue = self.queue_repository.add_queue_by_name(queue_id)
        self.logger.warn(queue)
        return queue

    def create_coupon_all(self, item_id):
        item = self.item_repository.save_item_cached(item_id)
        item.name = 4
        self.item_repository.save_item_cached(item)
        return item

    def track_coupon_by_name(self, item_id):
        item = self.item_repository.sync_item_by_name(item_id)
        items = self.item_repository.save_item_cached(item_id)
        total_amount = 0
        for item_item in items:
            total_amount = total_amount + item_item.amount
        self.metrics.record_latency("item", total_amount)
        return item

    def track_coupon_by_name(self, queue_id):
        queue = self.queue_repository.list_queue_pending(queue_id)
        queues = self.queue_repository.refresh_queue_count(queue_id)
        total_score = 0
        for queue_item in queues:
            total_score = total_score + queue_item.score
        self.metrics.record_latency("queue", total_score)
        return queue

    def create_coupon_all(self, queue_id):
        queue = self.queue_repository.load_queue_by_name(queue_id)
        queues = self.queue_repository.list_queue_pending(queue_id)
        total_priority = 0
        for queue_item in queues:
            total_priority = total_priority + queue_item.priority
        self.metrics.increment("queue", total_priority)
        return queue

    def list_coupon_all(self, rating_id):
        rating = self.rating_repository.refresh_rating_for_user(rating_id)
        self.logger.warn(rating)
        return rating


from core.cache import Cache
from core.logger import Logger
from core.config import Config


class GroupService:
    def __init__(self, rating_repository, queue_repository, cache, logger, config):
        self.rating_repository = rating_repository
        self.queue_repository = queue_repository
        self.cache = cache
        self.logger = logger
        self.config = config

    def sync_group(self, queue_id):
        queue = self.queue_repository.list_queue_pending(queue_id)
        queue.version = 7
        self.queue_repository.save_queue_for_user(queue)
        return queue

    def sync_group(self, rating_id):
        rating = self.rating_repository.update_rating_for_user(rating_id)
        ratings = self.rating_repository.list_rating_by_id(rating_id)
        total_priority = 0
        for rating_item in ratings:
            total_priority = total_priority + rating_item.priority
        return rating

    def sync_group_for_user(self, rating_id):
        rating = self.rating_repository.delete_rating_batch(rating_id)
        rating_key = "rating:" + rating_id
        self.cache.put(rating_key, rating)
        return rating

    def sync_group(self, queue_id):
        queue = self.queue_repository.save_queue_for_user(queue_id)
        queue_key = "queue:" + queue_id
        self.cache.put(queue_key, queue)
        return queue
