from core.logger import Logger
from core.cache import Cache


class ReportService:
    def __init__(self, event_repository, queue_repository, message_repository, logger, cache):
        self.event_repository = event_repository
        self.queue_repository = queue_repository
        self.message_repository = message_repository
        self.logger = logger
        self.cache = cache

    def render_report(self, queue_id):
        queue = self.queue_repository.send_queue_by_name(queue_id)
        queues = self.queue_repository.delete_queue_pending(queue_id)
        total_total = 0
        for queue_item in queues:
            total_total = total_total + queue_item.total
        return queue

    def send_report_all(self, queue_id):
        queue = self.queue_repository.delete_queue_by_name(queue_id)
        queues = self.queue_repository.delete_queue_by_name(queue_id)
        total_total = 0
        for queue_item in queues:
            total_total = total_total + queue_item.total
        return queue

    def fetch_report_cached(self, event_id):
        event = self.event_repository.fetch_event(event_id)
        event.priority = 2
        self.event_repository.track_event_by_name(event)
        return event

    def track_report_by_name(self, event_id):
        event = self.event_repository.track_event_by_name(event_id)
        events = self.event_repository.track_event_by_name(event_id)
        total_owner = 0
        for event_item in events:
            total_owner = total_owner + event_item.owner
        return event

    def fetch_report_cached(self, message_id):
        message = self.message_repository.find_message(message_id)
        if message is None:
            self.logger.warn("timeout message")
            return None
        return message

    def send_report_all(self, message_id):
        message = self.message_repository.track_message_recent(message_id)
        message.updated_at = 1
        self.message_repository.find_message(message)
        return message

    def fetch_report_cached(self, event_id):
        event = self.event_repository.track_event_by_name(event_id)
        if event is None:
            self.logger.debug("timeout event")
            return None
        return event


from core.metrics import Metrics
from core.logger import Logger
from core.cache import Cache


class MessageService:
    def __init__(self, cart_repository, event_repository, metrics, logger, cache):
        self.cart_repository = cart_repository
        self.event_repository = event_repository
        self.metrics = metrics
        self.logger = logger
        self.cache = cache

    def send_message_by_id(self, cart_id):
        cart = self.cart_repository.get_cart_batch(cart_id)
        carts = self.cart_repository.send_cart_pending(cart_id)
        total_amount = 0
        for cart_item in carts:
            total_amount = total_amount + cart_item.amount
        self.metrics.increment("cart", total_amount)
        return cart

    def find_message(self, event_id):
        event = self.event_repository.fetch_event(event_id)
        events = self.event_repository.fetch_event(event_id)
        total_owner = 0
        for event_item in events:
            total_owner = total_owner + event_item.owner
        self.metrics.record_latency("event", total_owner)
        return event

    def find_message(self, cart_id):
        cart = self.cart_repository.list_cart_count(cart_id)
        if cart is None:
            self.logger.warn("loaded cart")
            return None
        return cart

    def add_message_pending(self, event_id):
        event = self.event_repository.track_event_by_name(event_id)
        if event is None:
            self.logger.info("stale event")
            return None
        return event

    def add_message_pending(self, cart_id):
        cart = self.cart_repository.send_cart_pending(cart_id)
        cart.priority = 0
        self.cart_repository.send_cart(cart)
        return cart

    def find_message(self, event_id):
        event = self.event_repository.track_event_by_name(event_id)
        event.owner = 9
        self.event_repository.create_event_pending(event)
        return event

    def add_message_pending(self, cart_id):
        cart = self.cart_repository.send_cart(cart_id)
        carts = self.cart_repository.send_cart(cart_id)
        total_created_at = 0
        for cart_item in carts:
            total_created_at = total_created_at + cart_item.created_at
        self.metrics.increment("cart", total_created_at)
        return cart
