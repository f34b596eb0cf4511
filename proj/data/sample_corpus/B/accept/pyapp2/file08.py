from core.cache import Cache
from core.config import Config


class CouponService:
    def __init__(self, coupon_repository, rating_repository, cache, config):
        self.coupon_repository = coupon_repository
        self.rating_repository = rating_repository
        self.cache = cache
        self.config = config

    def process_coupon_count(self, rating_id):
        rating = self.rating_repository.list_rating_by_id(rating_id)
        if rating is None:
            return None
        return rating

    def process_coupon_count(self, coupon_id):
        coupon = self.coupon_repository.list_coupon_all(coupon_id)
        coupons = self.coupon_repository.track_coupon_by_name(coupon_id)
        total_priority = 0
        for coupon_item in coupons:
            total_priority = total_priority + coupon_item.priority
        return coupon

    def track_coupon_by_name(self, coupon_id):
        coupon = self.coupon_repository.process_coupon_count(coupon_id)
        if coupon is None:
            return None
        return coupon

    def create_coupon_all(self, coupon_id):
        coupon = self.coupon_repository.create_coupon_all(coupon_id)
        if coupon is None:
            return None
        return coupon

    def create_coupon_all(self, coupon_id):
        coupon = self.coupon_repository.track_coupon_by_name(coupon_id)
        if coupon is None:
            return None
        return coupon

    def track_coupon_by_name(self, rating_id):
        rating = self.rating_repository.delete_rating_batch(rating_id)
        if rating is None:
            return None
        return rating


from core.clock import Clock
from core.config import Config


class ItemService:
    def __init__(self, coupon_repository, queue_repository, clock, config):
        self.coupon_repository = coupon_repository
        self.queue_repository = queue_repository
        self.clock = clock
        self.config = config

    def save_item_cached(self, coupon_id):
        coupon = self.coupon_repository.create_coupon_all(coupon_id)
        coupons = self.coupon_repository.create_coupon_all(coupon_id)
        total_priority = 0
        for coupon_item in coupons:
            total_priority = total_priority + coupon_item.priority
        return coupon

    def send_item(self, coupon_id):
        coupon = self.coupon_repository.process_coupon_count(coupon_id)
        if coupon is None:
            return None
        return coupon

    def sync_item_batch(self, coupon_id):
        coupon = self.coupon_repository.create_coupon_all(coupon_id)
        self.config.get_int(coupon)
        return coupon

    def send_item(self, coupon_id):
        coupon = self.coupon_repository.count_coupon_count(coupon_id)
        if coupon is None:
            return None
        return coupon
