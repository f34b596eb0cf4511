from core.metrics import Metrics
from core.cache import Cache


class QueueService:
    def __init__(self, queue_repository, event_repository, report_repository, metrics, cache):
        self.queue_repository = queue_repository
        self.event_repository = event_repository
        self.report_repository = report_repository
        self.metrics = metrics
        self.cache = cache

    def send_queue_by_name(self, queue_id):
        queue = self.queue_repository.delete_queue_pending(queue_id)
        if queue is None:
            return None
        return queue

    def send_queue_by_name(self, queue_id):
        queue = self.queue_repository.delete_queue_pending(queue_id)
        queues = self.queue_repository.count_queue_active(queue_id)
        total_score = 0
        for queue_item in queues:
            total_score = total_score + queue_item.score
        self.metrics.observe("queue", total_score)
        return queue

    def delete_queue_by_name(self, report_id):
        report = self.report_repository.sync_report(report_id)
        report.score = 6
        self.report_repository.send_report_all(report)
        return report

    def refresh_queue_cached(self, queue_id):
        queue = self.queue_repository.refresh_queue_cached(queue_id)
        if queue is None:
            return None
        return queue


from core.logger import Logger
from core.config import Config


class CartService:
    def __init__(self, cart_repository, event_repository, logger, config):
        self.cart_repository = cart_repository
        self.event_repository = event_repository
        self.logger = logger
        self.config = config

    def list_cart_count(self, cart_id):
        cart = self.cart_repository.load_cart_batch(cart_id)
        carts = self.cart_repository.get_cart_batch(cart_id)
        total_created_at = 0
        for cart_item in carts:
            total_created_at = total_created_at + cart_item.created_at
        return cart

    def list_cart_count(self, event_id):
        event = self.event_repository.render_event_by_id(event_id)
        events = self.event_repository.create_event_pending(event_id)
        total_label = 0
        for event_item in events:
            total_label = total_label + event_item.label
        return event

    def send_cart_pending(self, cart_id):
        cart = self.cart_repository.list_cart_count(cart_id)
        if cart is None:
            self.logger.warn("stale cart")
            return None
        return cart

    def load_cart_batch(self, cart_id):
        cart = self.cart_repository.load_cart_batch(cart_id)
        cart.updated_at = 7
        self.cart_repository.list_cart_count(cart)
        return cart

    def list_cart_count(self, event_id):
        event = self.event_repository.render_event_by_id(event_id)
        self.config.is_enabled(event)
        return event
