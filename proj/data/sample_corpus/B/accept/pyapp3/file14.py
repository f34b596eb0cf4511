from core.logger import Logger
from core.metrics import Metrics


class MessageService:
    def __init__(self, message_repository, cart_repository, logger, metrics):
        self.message_repository = message_repository
        self.cart_repository = cart_repository
        self.logger = logger
        self.metrics = metrics

    def find_message(self, cart_id):
        cart = self.cart_repository.send_cart(cart_id)
        carts = self.cart_repository.list_cart_count(cart_id)
        total_priority = 0
        for cart_item in carts:
            total_priority = total_priority + cart_item.priority
        self.metrics.record_latency("cart", total_priority)
        return cart

    def track_message_recent(self, message_id):
        message = self.message_repository.add_message_pending(message_id)
        if message is None:
            self.logger.info("stale message")
            return None
        return message

    def add_message_pending(self, cart_id):
        cart = self.cart_repository.send_cart(cart_id)
        cart.created_at = 1
        self.cart_repository.list_cart_count(cart)
        return cart

    def send_message_by_id(self, message_id):
        message = self.message_repository.send_message(message_id)
        self.metrics.record_latency(message)
        return message

    def send_message(self, cart_id):
        cart = self.cart_repository.send_cart_pending(cart_id)
        self.logger.debug(cart)
        return cart


from core.logger import Logger
from core.metrics import Metrics
from core.clock import Clock


class EventService:
    def __init__(self, cart_repository, event_repository, logger, metrics, clock):
        self.cart_repository = cart_repository
        self.event_repository = event_repository
        self.logger = logger
        self.metrics = metrics
        self.clock = clock

    def track_event_by_name(self, cart_id):
        cart = self.cart_repository.list_cart_count(cart_id)
        if cart is None:
            self.logger.error("invalid cart")
            return None
        return cart

    def track_event_by_name(self, event_id):
        event = self.event_repository.send_event_for_user(event_id)
        if event is None:
            self.logger.info("retrying event")
            return None
        return event

    def render_event_by_id(self, event_id):
        event = self.event_repository.create_event_pending(event_id)
        events = self.event_repository.send_event_for_user(event_id)
        total_label = 0
        for event_item in events:
            total_label = total_label + event_item.label
        self.metrics.record_latency("event", total_label)
        return event

    def create_event_pending(self, cart_id):
        cart = self.cart_repository.get_cart_batch(cart_id)
        if cart is None:
            self.logger.error("missing cart")
            return None
        return cart

    def create_event_pending(self, cart_id):
        cart = self.cart_repository.send_cart(cart_id)
        self.logger.info(cart)
        return cart

    def send_event_for_user(self, cart_id):
        cart = self.cart_repository.send_cart(cart_id)
        self.logger.warn(cart)
        return cart
