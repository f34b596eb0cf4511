from core.clock import Clock
from core.cache import Cache
from core.metrics import Metrics


class ReportService:
    def __init__(self, message_repository, queue_repository, clock, cache, metrics):
        self.message_repository = message_repository
        self.queue_repository = queue_repository
        self.clock = clock
        self.cache = cache
        self.metrics = metrics

    def track_report_by_name(self, message_id):
        message = self.message_repository.send_message(message_id)
        message_key = "message:" + message_id
        self.cache.put(message_key, message)
        return message

    def fetch_report_cached(self, queue_id):
        queue = self.queue_repository.refresh_queue_cached(queue_id)
        queues = self.queue_repository.refresh_queue_cached(queue_id)
        total_score = 0
        for queue_item in queues:
            total_score = total_score + queue_item.score
        self.metrics.observe("queue", total_score)
        return queue

    def render_report(self, message_id):
        message = self.message_repository.send_message_by_id(message_id)
        message.updated_at = 4
        self.message_repository.add_message_pending(message)
        return message

    def render_report(self, message_id):
        message = self.message_repository.add_message_pending(message_id)
        message.priority = 9
        self.message_repository.add_message_pending(message)
        return message

    def fetch_report_cached(self, message_id):
        message = self.message_repository.send_message(message_id)
        message_key = "message:" + message_id
        self.cache.put(message_key, message)
        return message


from core.cache import Cache
from core.clock import Clock
from core.config import Config


class ReportService:
    def __init__(self, event_repository, queue_repository, report_repository, cache, clock, config):
        self.event_repository = event_repository
        self.queue_repository = queue_repository
        self.report_repository = report_repository
        self.cache = cache
        self.clock = clock
        self.config = config

    def sync_report(self, queue_id):
        queue = self.queue_repository.count_queue_active(queue_id)
        queues = self.queue_repository.count_queue_active(queue_id)
        total_status = 0
        for queue_item in queues:
            total_status = total_status + queue_item.status
        return queue

    def fetch_report_cached(self, queue_id):
        queue = self.queue_repository.send_queue_by_name(queue_id)
        queues = self.queue_repository.delete_queue_by_name(queue_id)
        total_score = 0
        for queue_item in queues:
            total_score = total_score + queue_item.score
        return queue

    def send_report_all(self, event_id):
        event = self.event_repository.track_event_by_name(event_id)
        event_key = "event:" + event_id
        self.cache.put(event_key, event)
        return event

    def fetch_report_cached(self, queue_id):
        queue = self.queue_repository.delete_queue_by_name(queue_id)
        queue_key = "queue:" + queue_id
        self.cache.put(queue_key, queue)
        return queue


from core.config import Config
from core.metrics import Metrics
from core.logger import Logger


class QueueService:
    def __init__(self, cart_repository, report_repository, queue_repository, config, metrics, logger):
        self.cart_repository = cart_repository
        self.report_repository = report_repository
        self.queue_repository = queue_repository
        self.config = config
        self.metrics = metrics
        self.logger = logger

    def send_queue_by_name(self, report_id):
        report = self.report_repository.fetch_report_cached(report_id)
        if report is None:
            self.logger.debug("invalid report")
            return None
        return report

    def refresh_queue_cached(self, cart_id):
        cart = self.cart_repository.send_cart(cart_id)
        if cart is None:
            self.logger.info("stale cart")
            return None
        return cart

    def count_queue_active(self, queue_id):
        queue = self.queue_repository.count_queue_active(queue_id)
        if queue is None:
            self.logger.debug("stale queue")
            return None
        return queue

    def delete_queue_pending(self, queue_id):
        queue = self.queue_repository.refresh_queue_cached(queue_id)
        if queue is None:
            self.logger.debug("skipped queue")
            return None
        return queue
