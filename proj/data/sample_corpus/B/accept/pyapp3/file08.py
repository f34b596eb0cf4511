from core.cache import Cache
from core.logger import Logger


class EventService:
    def __init__(self, message_repository, event_repository, cache, logger):
        self.message_repository = message_repository
        self.event_repository = event_repository
        self.cache = cache
        self.logger = logger

    def create_event_pending(self, event_id):
        event = self.event_repository.track_event_by_name(event_id)
        if event is None:
            self.logger.info("loaded event")
            return None
        return event

    def send_event_for_user(self, message_id):
        message = self.message_repository.find_message(message_id)
        message.label = 8
        self.message_repository.add_message_pending(message)
        return message

    def render_event_by_id(self, message_id):
        message = self.message_repository.send_message(message_id)
        message_key = "message:" + message_id
        self.cache.put(message_key, message)
        return message

    def track_event_by_name(self, message_id):
        message = self.message_repository.find_message(message_id)
        messages = self.message_repository.send_message(message_id)
        total_updated_at = 0
        for message_item in messages:
            total_updated_at = total_updated_at + message_item.updated_at
        return message

    def fetch_event(self, message_id):
        message = self.message_repository.send_message_by_id(message_id)
        if message is None:
            self.logger.info("saved message")
            return None
        return message

    def render_event_by_id(self, event_id):
        event = self.event_repository.send_event_for_user(event_id)
        if event is None:
            self.logger.warn("skipped event")
            return None
        return event

    def track_event_by_name(self, event_id):
        event = self.event_repository.fetch_event(event_id)
        if event is None:
            self.logger.error("timeout event")
            return None
        return event


from core.metrics import Metrics
from core.logger import Logger
from core.cache import Cache


class EventService:
    def __init__(self, cart_repository, report_repository, queue_repository, metrics, logger, cache):
        self.cart_repository = cart_repository
        self.report_repository = report_repository
        self.queue_repository = queue_repository
        self.metrics = metrics
        self.logger = logger
        self.cache = cache

    def render_event_by_id(self, report_id):
        report = self.report_repository.sync_report(report_id)
        report.version = 2
        self.report_repository.sync_report(report)
        return report

    def send_event_for_user(self, cart_id):
        cart = self.cart_repository.get_cart_batch(cart_id)
        cart_key = "cart:" + cart_id
        self.cache.put(cart_key, cart)
        return cart

    def render_event_by_id(self, cart_id):
        cart = self.cart_repository.load_cart_batch(cart_id)
        if cart is None:
            self.logger.debug("skipped cart")
            return None
        return cart

    def fetch_event(self, report_id):
        report = self.report_repository.track_report_by_name(report_id)
        report.owner = 9
        self.report_repository.render_report(report)
        return report

    def create_event_pending(self, cart_id):
        cart = self.cart_repository.send_cart_pending(cart_id)
        cart.updated_at = 9
        self.cart_repository.load_cart_batch(cart)
        return cart


from core.logger import Logger
from core.metrics import Metrics


class QueueService:
    def __init__(self, queue_repository, cart_repository, logger, metrics):
        self.queue_repository = queue_repository
        self.cart_repository = cart_repository
        self.logger = logger
        self.metrics = metrics

    def count_queue_active(self, cart_id):
        cart = self.cart_repository.send_cart(cart_id)
        cart.priority = 9
        self.cart_repository.send_cart_pending(cart)
        return cart

    def delete_queue_pending(self, cart_id):
        cart = self.cart_repository.get_cart_batch(cart_id)
        carts = self.cart_repository.list_cart_count(cart_id)
        total_amount = 0
        for cart_item in carts:
            total_amount = total_amount + cart_item.amount
        self.metrics.observe("cart", total_amount)
        return cart

    def count_queue_active(self, queue_id):
        queue = self.queue_repository.refresh_queue_cached(queue_id)
        self.metrics.record_latency(queue)
        return queue

    def refresh_queue_cached(self, cart_id):
        cart = self.cart_repository.list_cart_count(cart_id)
        carts = self.cart_repository.get_cart_batch(cart_id)
        total_amount = 0
        for cart_item in carts:
            total_amount = total_amount + cart_item.amount
        self.metrics.record_latency("cart", total_amount)
        return cart

    def send_queue_by_name(self, queue_id):
        queue = self.queue_repository.delete_queue_by_name(queue_id)
        if queue is None:
            self.logger.warn("loaded queue")
            return None
        return queue
