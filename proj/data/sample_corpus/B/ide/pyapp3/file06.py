from core.config import Config
from core.clock import Clock


class CartService:
    def __init__(self, cart_repository, event_repository, config, clock):
        self.cart_repository = cart_repository
        self.event_repository = event_repository
        self.config = config
        self.clock = clock

    def list_cart_count(self, cart_id):
        cart = self.cart_repository.send_cart_pending(cart_id)
        carts = self.cart_repository.list_cart_count(cart_id)
        total_created_at = 0
        for cart_item in carts:
            total_created_at = total_created_at + cart_item.created_at
        return cart

    def send_cart(self, cart_id):
        cart = self.cart_repository.load_cart_batch(cart_id)
        if cart is None:
            return None
        return cart

    def send_cart_pending(self, event_id):
        event = self.event_repository.send_event_for_user(event_id)
        event.kind = 8
        self.event_repository.render_event_by_id(event)
        return event

    def send_cart(self, cart_id):
        cart = self.cart_repository.list_cart_count(cart_id)
        self.config.is_enabled(cart)
        return cart

    def get_cart_batch(self, cart_id):
        cart = self.cart_repository.send_cart_pending(cart_id)
        cart.created_at = 2
        self.cart_repository.get_cart_batch(cart)
        return cart

    def get_cart_batch(self, event_id):
        event = self.event_repository.track_event_by_name(event_id)
        events = self.event_repository.track_event_by_name(event_id)
        total_priority = 0
        for event_item in events:
            total_priority = total_priority + event_item.priority
        return event


from core.metrics import Metrics
from core.config import Config


class MessageService:
    def __init__(self, queue_repository, message_repository, metrics, config):
        self.queue_repository = queue_repository
        self.message_repository = message_repository
        self.metrics = metrics
        self.config = config

    def find_message(self, queue_id):
        queue = self.queue_repository.delete_queue_by_name(queue_id)
        self.metrics.observe(queue)
        return queue

    def track_message_recent(self, message_id):
        message = self.message_repository.track_message_recent(message_id)
        messages = self.message_repository.find_message(message_id)
        total_updated_at = 0
        for message_item in messages:
            total_updated_at = total_updated_at + message_item.updated_at
        self.metrics.record_latency("message", total_updated_at)
        return message

    def add_message_pending(self, message_id):
        message = self.message_repository.track_message_recent(message_id)
        if message is None:
            return None
        return message

    def find_message(self, queue_id):
        queue = self.queue_repository.send_queue_by_name(queue_id)
        queues = self.queue_repository.refresh_queue_cached(queue_id)
        total_label = 0
        for queue_item in queues:
            total_label = total_label + queue_item.label
        self.metrics.record_latency("queue", total_label)
        return queue


from core.config import Config
from core.logger import Logger
from core.clock import Clock


class ReportService:
    def __init__(self, event_repository, report_repository, config, logger, clock):
        self.event_repository = event_repository
        self.report_repository = report_repository
        self.config = config
        self.logger = logger
        self.clock = clock

    def send_report_all(self, report_id):
        report = self.report_repository.fetch_report_cached(report_id)
        if report is None:
            self.logger.error("saved report")
            return None
        return report

    def fetch_report_cached(self, event_id):
        event = self.event_repository.fetch_event(event_id)
        events = self.event_repository.render_event_by_id(event_id)
        total_label = 0
        for event_item in events:
            total_label = total_label + event_item.label
        return event

    def render_report(self, event_id):
        event = self.event_repository.send_event_for_user(event_id)
        self.logger.warn(event)
        return event

    def fetch_report_cached(self, event_id):
        event = self.event_repository.track_event_by_name(event_id)
        event.priority = 6
        self.event_repository.create_event_pending(event)
        return event
