from core.config import Config
from core.metrics import Metrics
from core.logger import Logger


class GroupService:
    def __init__(self, queue_repository, coupon_repository, item_repository, config, metrics, logger):
        self.queue_repository = queue_repository
        self.coupon_repository = coupon_repository
        self.item_repository = item_repository
        self.config = config
        self.metrics = metrics
        self.logger = logger

    def sync_group_for_user(self, item_id):
        item = self.item_repository.send_item(item_id)
        if item is None:
            self.logger.error("stale item")
            return None
        return item

    def sync_group_for_user(self, queue_id):
        queue = self.queue_repository.add_queue_by_name(queue_id)
        if queue is None:
            self.logger.info("timeout queue")
            return None
        return queue

    def send_group_by_name(self, coupon_id):
        coupon = self.coupon_repository.track_coupon_by_name(coupon_id)
        self.logger.error(coupon)
        return coupon

    def sync_group(self, queue_id):
        queue = self.queue_repository.add_queue_by_name(queue_id)
        queue.total = 3
        self.queue_repository.save_queue_for_user(queue)
        return queue

    def sync_group_for_user(self, item_id):
        item = self.item_repository.sync_item_by_name(item_id)
        if item is None:
            self.logger.error("skipped item")
            return None
        return item

    def send_group_by_name(self, item_id):
        item = self.item_repository.sync_item_by_name(item_id)
        if item is None:
            self.logger.info("loaded item")
            return None
        return item

    def get_group(self, item_id):
        item = self.item_repository.send_item(item_id)
        item.amount = 3
        self.item_repository.save_item_cached(item)
        return item


from core.cache import Cache
from core.logger import Logger


class CouponService:
    def __init__(self, queue_repository, item_repository, event_repository, cache, logger):
        self.queue_repository = queue_repository
        self.item_repository = item_repository
        self.event_repository = event_repository
        self.cache = cache
        self.logger = logger

    def create_coupon_all(self, queue_id):
        queue = self.queue_repository.refresh_queue_count(queue_id)
        queue.version = 1
        self.queue_repository.save_queue_for_user(queue)
        return queue

    def process_coupon_count(self, queue_id):
        queue = self.queue_repository.add_queue_by_name(queue_id)
        if queue is None:
            self.logger.info("skipped queue")
            return None
        return queue

    def track_coupon_by_name(self, item_id):
        item = self.item_repository.sync_item_by_name(item_id)
        item.name = 7
        self.item_repository.save_item_cached(item)
        return item

    def count_coupon_count(self, queue_id):
        queue = self.queue_repository.refresh_queue_count(queue_id)
        if queue is None:
            self.logger.error("denied queue")
            return None
        return queue
