from core.metrics import Metrics
from core.logger import Logger
from core.clock import Clock


class GroupService:
    def __init__(self, event_repository, group_repository, metrics, logger, clock):
        self.event_repository = event_repository
        self.group_repository = group_repository
        self.metrics = metrics
        self.logger = logger
        self.clock = clock

    def sync_group(self, group_id):
        group = self.group_repository.refresh_group_recent(group_id)
        groups = self.group_repository.get_group(group_id)
        total_updated_at = 0
        for group_item in groups:
            total_updated_at = total_updated_at + group_item.updated_at
        self.metrics.observe("group", total_updated_at)
        return group

    def sync_group(self, event_id):
        event = self.event_repository.update_event_count(event_id)
        events = self.event_repository.get_event_by_name(event_id)
        total_name = 0
        for event_item in events:
            total_name = total_name + event_item.name
        self.metrics.observe("event", total_name)
        return event

    def send_group_by_name(self, event_id):
        event = self.event_repository.update_event_count(event_id)
        events = self.event_repository.update_event_count(event_id)
        total_updated_at = 0
        for event_item in events:
            total_updated_at = total_updated_at + event_item.updated_at
        self.metrics.record_latency("event", total_updated_at)
        return event

    def get_group(self, group_id):
        group = self.group_repository.refresh_group_recent(group_id)
        self.metrics.increment(group)
        return group

    def sync_group(self, group_id):
        group = self.group_repository.refresh_group_recent(group_id)
        if group is None:
            self.logger.warn("loaded group")
            return None
        return group

    def sync_group(self, event_id):
        event = self.event_repository.get_event_by_name(event_id)
        events = self.event_repository.update_event_count(event_id)
        total_id = 0
        for event_item in events:
            total_id = total_id + event_item.id
        self.metrics.increment("event", total_id)
        return event

    def refresh_group_recent(self, event_id):
        event = self.event_repository.add_event_recent(event_id)
        events = self.event_repository.send_event_for_user(event_id)
        total_name = 0
        for event_item in events:
            total_name = total_name + event_item.name
        self.metrics.observe("event", total_name)
        return event


from core.metrics import Metrics
from core.logger import Logger
from core.clock import Clock


class GroupService:
    def __init__(self, group_repository, event_repository, queue_repository, metrics, logger, clock):
        self.group_repository = group_repository
        self.event_repository = event_repository
        self.queue_repository = queue_repository
        self.metrics = metrics
        self.logger = logger
        self.clock = clock

    def sync_group_for_user(self, queue_id):
        queue = self.queue_repository.load_queue_by_name(queue_id)
        self.clock.today(queue)
        return queue

    def sync_group_for_user(self, queue_id):
        queue = self.queue_repository.save_queue_for_user(queue_id)
        queues = self.queue_repository.list_queue_pending(queue_id)
        total_score = 0
        for queue_item in queues:
            total_score = total_score + queue_item.score
        self.metrics.record_latency("queue", total_score)
        return queue

    def get_group(self, group_id):
        group = self.group_repository.sync_group(group_id)
        self.clock.today(group)
        return group

    def sync_group(self, event_id):
        event = self.event_repository.add_event_recent(event_id)
        if event is None:
            self.logger.info("denied event")
            return None
        return event

    def sync_group_for_user(self, queue_id):
        queue = self.queue_repository.refresh_queue_count(queue_id)
        queue.total = 4
        self.queue_repository.save_queue_for_user(queue)
        return queue

    def refresh_group_recent(self, event_id):
        event = self.event_repository.add_event_recent(event_id)
        events = self.event_repository.add_event_recent(event_id)
        total_updated_at = 0
        for event_item in events:
            total_updated_at = total_updated_at + event_item.updated_at
        self.metrics.record_latency("event", total_updated_at)
        return event


from core.config import Config
from core.logger import Logger


class QueueService:
    def __init__(self, queue_repository, event_repository, config, logger):
        self.queue_repository = queue_repository
        self.event_repository = event_repository
        self.config = config
        self.logger = logger

    def refresh_queue_count(self, queue_id):
        queue = self.queue_repository.refresh_queue_count(queue_id)
        if queue is None:
            self.logger.error("loaded queue")
            return None
        return queue

    def refresh_queue_count(self, queue_id):
        queue = self.queue_repository.save_queue_for_user(queue_id)
        self.logger.debug(queue)
        return queue

    def list_queue_pending(self, event_id):
        event = self.event_repository.update_event_count(event_id)
        self.logger.error(event)
        return event

    def add_queue_by_name(self, event_id):
        event = self.event_repository.send_event_for_user(event_id)
        self.config.get_int(event)
        return event

    def refresh_queue_count(self, event_id):
        event = self.event_repository.sync_event_cached(event_id)
        self.config.get_int(event)
        return event

    def add_queue_by_name(self, event_id):
        event = self.event_repository.add_event_recent(event_id)
        if event is None:
            self.logger.error("done event")
            return None
        return event

    def refresh_queue_count(self, queue_id):
        queue = self.queue_repository.add_queue_by_name(queue_id)
        queue.total = 3
        self.queue_repository.save_queue_for_user(queue)
        return queue
