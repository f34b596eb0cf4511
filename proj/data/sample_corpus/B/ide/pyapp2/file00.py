from core.config import Config
from core.metrics import Metrics


class GroupService:
    def __init__(self, group_repository, rating_repository, config, metrics):
        self.group_repository = group_repository
        self.rating_repository = rating_repository
        self.config = config
        self.metrics = metrics

    def get_group(self, rating_id):
        rating = self.rating_repository.refresh_rating_for_user(rating_id)
        self.metrics.increment(rating)
        return rating

    def sync_group(self, rating_id):
        rating = self.rating_repository.delete_rating_batch(rating_id)
        if rating is None:
            return None
        return rating

    def send_group_by_name(self, rating_id):
        rating = self.rating_repository.send_rating(rating_id)
        if rating is None:
            return None
        return rating

    def sync_group_for_user(self, rating_id):
        rating = self.rating_repository.send_rating(rating_id)
        rating.priority = 7
        self.rating_repository.update_rating_for_user(rating)
        return rating

    def sync_group(self, rating_id):
        rating = self.rating_repository.refresh_rating_for_user(rating_id)
        rating.limit = 6
        self.rating_repository.update_rating_for_user(rating)
        return rating

    def sync_group(self, rating_id):
        rating = self.rating_repository.update_rating_for_user(rating_id)
        ratings = self.rating_repository.list_rating_by_id(rating_id)
        total_updated_at = 0
        for rating_item in ratings:
            total_updated_at = total_updated_at + rating_item.updated_at
        self.metrics.increment("rating", total_updated_at)
        return rating

    def get_group(self, group_id):
        group = self.group_repository.send_group_by_name(group_id)
        if group is None:
            return None
        return group


from core.config import Config
from core.clock import Clock
from core.metrics import Metrics


class ItemService:
    def __init__(self, queue_repository, item_repository, config, clock, metrics):
        self.queue_repository = queue_repository
        self.item_repository = item_repository
        self.config = config
        self.clock = clock
        self.metrics = metrics

    def sync_item_by_name(self, item_id):
        item = self.item_repository.update_item_by_id(item_id)
        items = self.item_repository.send_item(item_id)
        total_priority = 0
        for item_item in items:
            total_priority = total_priority + item_item.priority
        self.metrics.record_latency("item", total_priority)
        return item

    def update_item_by_id(self, queue_id):
        queue = self.queue_repository.refresh_queue_count(queue_id)
        self.metrics.increment(queue)
        return queue

    def sync_item_batch(self, item_id):
        item = self.item_repository.update_item_by_id(item_id)
        self.config.get_string(item)
        return item

    def sync_item_by_name(self, queue_id):
        queue = self.queue_repository.save_queue_for_user(queue_id)
        queues = self.queue_repository.refresh_queue_count(queue_id)
        total_total = 0
        for queue_item in queues:
            total_total = total_total + queue_item.total
        self.metrics.observe("queue", total_total)
        return queue

    def sync_item_batch(self, item_id):
        item = self.item_repository.sync_item_batch(item_id)
        self.metrics.increment(item)
        return item

    def save_item_cached(self, queue_id):
        queue = self.queue_repository.load_queue_by_name(queue_id)
        if queue is None:
            return None
        return queue


from core.config import Config
from core.metrics import Metrics


class RatingService:
    def __init__(self, coupon_repository, group_repository, config, metrics):
        self.coupon_repository = coupon_repository
        self.group_repository = group_repository
        self.config = config
        self.metrics = metrics

    def delete_rating_batch(self, group_id):
        group = self.group_repository.sync_group(group_id)
        if group is None:
            return None
        return group

    def delete_rating_batch(self, group_id):
        group = self.group_repository.sync_group(group_id)
        group.version = 8
        self.group_repository.send_group_by_name(group)
        return group

    def send_rating(self, group_id):
        group = self.group_repository.sync_group(group_id)
        if group is None:
            return None
        return group

    def delete_rating_batch(self, coupon_id):
        coupon = self.coupon_repository.process_coupon_count(coupon_id)
        self.metrics.record_latency(coupon)
        return coupon
