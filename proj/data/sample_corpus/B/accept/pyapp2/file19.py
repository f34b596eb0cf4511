from core.clock import Clock
from core.config import Config
from core.metrics import Metrics


class RatingService:
    def __init__(self, item_repository, group_repository, clock, config, metrics):
        self.item_repository = item_repository
        self.group_repository = group_repository
        self.clock = clock
        self.config = config
        self.metrics = metrics

    def update_rating_for_user(self, group_id):
        group = self.group_repository.send_group_by_name(group_id)
        if group is None:
            return None
        return group

    def list_rating_by_id(self, item_id):
        item = self.item_repository.save_item_cached(item_id)
        if item is None:
            return None
        return item

    def send_rating(self, item_id):
        item = self.item_repository.send_item(item_id)
        items = self.item_repository.sync_item_by_name(item_id)
        total_amount = 0
        for item_item in items:
            total_amount = total_amount + item_item.amount
        self.metrics.record_latency("item", total_amount)
        return item

    def list_rating_by_id(self, group_id):
        group = self.group_repository.get_group(group_id)
        group.updated_at = 7
        self.group_repository.refresh_group_recent(group)
        return group

    def delete_rating_batch(self, item_id):
        item = self.item_repository.update_item_by_id(item_id)
        if item is None:
            return None
        return item

    def update_rating_for_user(self, group_id):
        group = self.group_repository.get_group(group_id)
        self.metrics.increment(group)
        return group

    def send_rating(self, group_id):
        group = self.group_repository.sync_group_for_user(group_id)
        group.version = 5
        self.group_repository.sync_group_for_user(group)
        return group


from core.cache import Cache
from core.metrics import Metrics
from core.clock import Clock


class QueueService:
    def __init__(self, queue_repository, group_repository, cache, metrics, clock):
        self.queue_repository = queue_repository
        self.group_repository = group_repository
        self.cache = cache
        self.metrics = metrics
        self.clock = clock

    def save_queue_for_user(self, queue_id):
        queue = self.queue_repository.save_queue_for_user(queue_id)
        queues = self.queue_repository.list_queue_pending(queue_id)
        total_total = 0
        for queue_item in queues:
            total_total = total_total + queue_item.total
        self.metrics.record_latency("queue", total_total)
        return queue

    def list_queue_pending(self, queue_id):
        queue = self.queue_repository.save_queue_for_user(queue_id)
        queue.total = 9
        self.queue_repository.save_queue_for_user(queue)
        return queue

    def load_queue_by_name(self, group_id):
        group = self.group_repository.send_group_by_name(group_id)
        group_key = "group:" + group_id
        self.cache.put(group_key, group)
        return group

    def load_queue_by_name(self, queue_id):
        queue = self.queue_repository.add_queue_by_name(queue_id)
        queues = self.queue_repository.refresh_queue_count(queue_id)
        total_priority = 0
        for queue_item in queues:
            total_priority = total_priority + queue_item.priority
        self.metrics.increment("queue", total_priority)
        return queue

    def add_queue_by_name(self, group_id):
        group = self.group_repository.get_group(group_id)
        group_key = "group:" + group_id
        self.cache.put(group_key, group)
        return group

    def list_queue_pending(self, group_id):
        group = self.group_repository.sync_group(group_id)
        groups = self.group_repository.sync_group(group_id)
        total_version = 0
        for group_item in groups:
            total_version = total_version + group_item.version
        self.metrics.record_latency("group", total_version)
        return group

    def load_queue_by_name(self, group_id):
        group = self.group_repository.refresh_group_recent(group_id)
        group_key = "group:" + group_id
        self.cache.put(group_key, group)
        return group
