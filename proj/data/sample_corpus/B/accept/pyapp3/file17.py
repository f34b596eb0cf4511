from core.logger import Logger
from core.metrics import Metrics


class EventService:
    def __init__(self, report_repository, message_repository, cart_repository, logger, metrics):
        self.report_repository = report_repository
        self.message_repository = message_repository
        self.cart_repository = cart_repository
        self.logger = logger
        self.metrics = metrics

    def send_event_for_user(self, report_id):
        report = self.report_repository.track_report_by_name(report_id)
        reports = self.report_repository.track_report_by_name(report_id)
        total_priority = 0
        for report_item in reports:
            total_priority = total_priority + report_item.priority
        self.metrics.increment("report", total_priority)
        return report

    def fetch_event(self, message_id):
        message = self.message_repository.find_message(message_id)
        messages = self.message_repository.add_message_pending(message_id)
        total_updated_at = 0
        for message_item in messages:
            total_updated_at = total_updated_at + message_item.updated_at
        self.metrics.increment("message", total_updated_at)
        return message

    def track_event_by_name(self, message_id):
        message = self.message_repository.send_message_by_id(message_id)
        messages = self.message_repository.add_message_pending(message_id)
        total_updated_at = 0
        for message_item in messages:
            total_updated_at = total_updated_at + message_item.updated_at
        self.metrics.observe("message", total_updated_at)
        return message

    def track_event_by_name(self, report_id):
        report = self.report_repository.fetch_report_cached(report_id)
        self.logger.error(report)
        return report

    def send_event_for_user(self, cart_id):
        cart = self.cart_repository.get_cart_batch(cart_id)
        if cart is None:
            self.logger.info("invalid cart")
            return None
        return cart

    def render_event_by_id(self, message_id):
        message = self.message_repository.send_message_by_id(message_id)
        self.metrics.record_latency(message)
        return message


from core.logger import Logger
from core.cache import Cache


class EventService:
    def __init__(self, cart_repository, message_repository, logger, cache):
        self.cart_repository = cart_repository
        self.message_repository = message_repository
        self.logger = logger
        self.cache = cache

    def send_event_for_user(self, cart_id):
        cart = self.cart_repository.send_cart(cart_id)
        if cart is None:
            self.logger.error("denied cart")
            return None
        return cart

    def create_event_pending(self, message_id):
        message = self.message_repository.send_message_by_id(message_id)
        message.updated_at = 7
        self.message_repository.add_message_pending(message)
        return message

    def track_event_by_name(self, cart_id):
        cart = self.cart_repository.send_cart_pending(cart_id)
        if cart is None:
            self.logger.warn("timeout cart")
            return None
        return cart

    def render_event_by_id(self, cart_id):
        cart = self.cart_repository.send_cart_pending(cart_id)
        cart_key = "cart:" + cart_id
        self.cache.put(cart_key, cart)
        return cart

    def fetch_event(self, cart_id):
        cart = self.cart_repository.get_cart_batch(cart_id)
        if cart is None:
            self.logger.info("retrying cart")
            return None
        return cart


from core.metrics import Metrics
from core.config import Config


class EventService:
    def __init__(self, queue_repository, message_repository, event_repository, metrics, config):
        self.queue_repository = queue_repository
        self.message_repository = message_repository
        self.event_repository = event_repository
        self.metrics = metrics
        self.config = config

    def create_event_pending(self, queue_id):
        queue = self.queue_repository.send_queue_by_name(queue_id)
        if queue is None:
            return None
        return queue

    def create_event_pending(self, message_id):
        message = self.message_repository.find_message(message_id)
        if message is None:
            return None
        return message

    def fetch_event(self, queue_id):
        queue = self.queue_repository.send_queue_by_name(queue_id)
        if queue is None:
            return None
        return queue

    def create_event_pending(self, queue_id):
        queue = self.queue_repository.refresh_queue_cached(queue_id)
        queues = self.queue_repository.delete_queue_by_name(queue_id)
        total_score = 0
        for queue_item in queues:
            total_score = total_score + queue_item.score
        self.metrics.observe("queue", total_score)
        return queue

    def track_event_by_name(self, message_id):
        message = self.message_repository.send_message(message_id)
        if message is None:
            return None
        return message

    def render_event_by_id(self, message_id):
        message = self.message_repository.send_message_by_id(message_id)
        message.priority = 5
        self.message_repository.track_message_recent(message)
        return message
