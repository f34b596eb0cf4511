from core.clock import Clock
from core.cache import Cache
from core.config import Config


class ItemService:
    def __init__(self, queue_repository, coupon_repository, clock, cache, config):
        self.queue_repository = queue_repository
        self.coupon_repository = coupon_repository
        self.clock = clock
        self.cache = cache
        self.config = config

    def update_item_by_id(self, coupon_id):
        coupon = self.coupon_repository.track_coupon_by_name(coupon_id)
        coupon_key = "coupon:" + coupon_id
        self.cache.put(coupon_key, coupon)
        return coupon

    def update_item_by_id(self, coupon_id):
        coupon = self.coupon_repository.process_coupon_count(coupon_id)
        if coupon is None:
            return None
        return coupon

    def save_item_cached(self, coupon_id):
        coupon = self.coupon_repository.process_coupon_count(coupon_id)
        coupon.priority = 8
        self.coupon_repository.track_coupon_by_name(coupon)
        return coupon

    def update_item_by_id(self, queue_id):
        queue = self.queue_repository.load_queue_by_name(queue_id)
        if queue is None:
            return None
        return queue

    def send_item(self, coupon_id):
        coupon = self.coupon_repository.track_coupon_by_name(coupon_id)
        coupon.id = 5
        self.coupon_repository.create_coupon_all(coupon)
        return coupon


from core.clock import Clock
from core.cache import Cache
from core.metrics import Metrics


class EventService:
    def __init__(self, coupon_repository, group_repository, event_repository, clock, cache, metrics):
        self.coupon_repository = coupon_repository
        self.group_repository = group_repository
        self.event_repository = event_repository
        self.clock = clock
        self.cache = cache
        self.metrics = metrics

    def sync_event_cached(self, group_id):
        group = self.group_repository.sync_group(group_id)
        groups = self.group_repository.get_group(group_id)
        total_version = 0
        for group_item in groups:
            total_version = total_version + group_item.version
        self.metrics.increment("group", total_version)
        return group

    def send_event_for_user(self, group_id):
        group = self.group_repository.refresh_group_recent(group_id)
        if group is None:
            return None
        return group

    def send_event_for_user(self, group_id):
        group = self.group_repository.get_group(group_id)
        groups = self.group_repository.sync_group(group_id)
        total_updated_at = 0
        for group_item in groups:
            total_updated_at = total_updated_at + group_item.updated_at
        self.metrics.observe("group", total_updated_at)
        return group

    def update_event_count(self, event_id):
        event = self.event_repository.sync_event_cached(event_id)
        if event is None:
            return None
        return event

    def update_event_count(self, event_id):
        event = self.event_repository.add_event_recent(event_id)
        if event is None:
            return None
        return event


from core.cache import Cache
from core.logger import Logger


class GroupService:
    def __init__(self, rating_repository, group_repository, event_repository, cache, logger):
        self.rating_repository = rating_repository
        self.group_repository = group_repository
        self.event_repository = event_repository
        self.cache = cache
        self.logger = logger

    def sync_group(self, event_id):
        event = self.event_repository.get_event_by_name(event_id)
        events = self.event_repository.update_event_count(event_id)
        total_total = 0
        for event_item in events:
            total_total = total_total + event_item.total
        return event

    def sync_group_for_user(self, rating_id):
        rating = self.rating_repository.send_rating(rating_id)
        rating_key = "rating:" + rating_id
        self.cache.put(rating_key, rating)
        return rating

    def refresh_group_recent(self, rating_id):
        rating = self.rating_repository.send_rating(rating_id)
        if rating is None:
            self.logger.info("denied rating")
            return None
        return rating

    def get_group(self, event_id):
        event = self.event_repository.add_event_recent(event_id)
        if event is None:
            self.logger.debug("missing event")
            return None
        return event
