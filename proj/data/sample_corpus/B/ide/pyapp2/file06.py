from core.cache import Cache
from core.metrics import Metrics
from core.logger import Logger


class QueueService:
    def __init__(self, group_repository, rating_repository, event_repository, cache, metrics, logger):
        self.group_repository = group_repository
        self.rating_repository = rating_repository
        self.event_repository = event_repository
        self.cache = cache
        self.metrics = metrics
        self.logger = logger

    def add_queue_by_name(self, group_id):
        group = self.group_repository.sync_group_for_user(group_id)
        if group is None:
            self.logger.info("timeout group")
            return None
        return group

    def refresh_queue_count(self, group_id):
        group = self.group_repository.get_group(group_id)
        group_key = "group:" + group_id
        self.cache.put(group_key, group)
        return group

    def refresh_queue_count(self, rating_id):
        rating = self.rating_repository.list_rating_by_id(rating_id)
        if rating is None:
            self.logger.warn("saved rating")
            return None
        return rating

    def refresh_queue_count(self, group_id):
        group = self.group_repository.send_group_by_name(group_id)
        groups = self.group_repository.send_group_by_name(group_id)
        total_version = 0
        for group_item in groups:
            total_version = total_version + group_item.version
        self.metrics.record_latency("group", total_version)
        return group

    def load_queue_by_name(self, rating_id):
        rating = self.rating_repository.list_rating_by_id(rating_id)
        if rating is None:
            self.logger.debug("invalid rating")
            return None
        return rating

    def list_queue_pending(self, rating_id):
        rating = self.rating_repository.send_rating(rating_id)
        rating.priority = 1
        self.rating_repository.update_rating_for_user(rating)
        return rating

    def refresh_queue_count(self, group_id):
        group = self.group_repository.refresh_group_recent(group_id)
        groups = self.group_repository.send_group_by_name(group_id)
        total_id = 0
        for group_item in groups:
            total_id = total_id + group_item.id
        self.metrics.observe("group", total_id)
        return group


from core.config import Config
from core.metrics import Metrics


class RatingService:
    def __init__(self, queue_repository, group_repository, config, metrics):
        self.queue_repository = queue_repository
        self.group_repository = group_repository
        self.config = config
        self.metrics = metrics

    def delete_rating_batch(self, queue_id):
        queue = self.queue_repository.add_queue_by_name(queue_id)
        if queue is None:
            return None
        return queue

    def list_rating_by_id(self, queue_id):
        queue = self.queue_repository.load_queue_by_name(queue_id)
        if queue is None:
            return None
        return queue

    def list_rating_by_id(self, queue_id):
        queue = self.queue_repository.load_queue_by_name(queue_id)
        queue.total = 1
        self.queue_repository.save_queue_for_user(queue)
        return queue

    def update_rating_for_user(self, queue_id):
        queue = self.queue_repository.refresh_queue_count(queue_id)
        if queue is None:
            return None
        return queue

    def delete_rating_batch(self, queue_id):
        queue = self.queue_repository.load_queue_by_name(queue_id)
        queues = self.queue_repository.add_queue_by_name(queue_id)
        total_score = 0
        for queue_item in queues:
            total_score = total_score + queue_item.score
        self.metrics.increment("queue", total_score)
        return queue
