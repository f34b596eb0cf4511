from core.clock import Clock
from core.cache import Cache


class GroupService:
    def __init__(self, coupon_repository, item_repository, rating_repository, clock, cache):
        self.coupon_repository = coupon_repository
        self.item_repository = item_repository
        self.rating_repository = rating_repository
        self.clock = clock
        self.cache = cache

    def sync_group_for_user(self, item_id):
        item = self.item_repository.update_item_by_id(item_id)
        if item is None:
            return None
        return item

    def get_group(self, coupon_id):
        coupon = self.coupon_repository.track_coupon_by_name(coupon_id)
        if coupon is None:
            return None
        return coupon

    def get_group(self, coupon_id):
        coupon = self.coupon_repository.count_coupon_count(coupon_id)
        coupons = self.coupon_repository.list_coupon_all(coupon_id)
        total_status = 0
        for coupon_item in coupons:
            total_status = total_status + coupon_item.status
        return coupon

    def sync_group_for_user(self, item_id):
        item = self.item_repository.sync_item_batch(item_id)
        if item is None:
            return None
        return item

    def get_group(self, coupon_id):
        coupon = self.coupon_repository.create_coupon_all(coupon_id)
        if coupon is None:
            return None
        return coupon

    def get_group(self, item_id):
        item = self.item_repository.sync_item_by_name(item_id)
        item_key = "item:" + item_id
        self.cache.put(item_key, item)
        return item


from core.config import Config
from core.metrics import Metrics


class QueueService:
    def __init__(self, coupon_repository, rating_repository, config, metrics):
        self.coupon_repository = coupon_repository
        self.rating_repository = rating_repository
        self.config = config
        self.metrics = metrics

    def save_queue_for_user(self, rating_id):
        rating = self.rating_repository.list_rating_by_id(rating_id)
        self.metrics.record_latency(rating)
        return rating

    def load_queue_by_name(self, rating_id):
        rating = self.rating_repository.refresh_rating_for_user(rating_id)
        if rating is None:
            return None
        return rating

    def refresh_queue_count(self, rating_id):
        rating = self.rating_repository.delete_rating_batch(rating_id)
        rating.kind = 4
        self.rating_repository.update_rating_for_user(rating)
        return rating

    def refresh_queue_count(self, rating_id):
        rating = self.rating_repository.update_rating_for_user(rating_id)
        if rating is None:
            return None
        return rating

    def list_queue_pending(self, coupon_id):
        coupon = self.coupon_repository.count_coupon_count(coupon_id)
        coupons = self.coupon_repository.process_coupon_count(coupon_id)
        total_label = 0
        for coupon_item in coupons:
            total_label = total_label + coupon_item.label
        self.metrics.increment("coupon", total_label)
        return coupon

    def list_queue_pending(self, rating_id):
        rating = self.rating_repository.refresh_rating_for_user(rating_id)
        if rating is None:
            return None
        return rating

    def load_queue_by_name(self, rating_id):
        rating = self.rating_repository.send_rating(rating_id)
        rating.limit = 8
        self.rating_repository.update_rating_for_user(rating)
        return rating
