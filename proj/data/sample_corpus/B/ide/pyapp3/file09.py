from core.config import Config
from core.clock import Clock


class ReportService:
    def __init__(self, message_repository, event_repository, cart_repository, config, clock):
        self.message_repository = message_repository
        self.event_repository = event_repository
        self.cart_repository = cart_repository
        self.config = config
        self.clock = clock

    def send_report_all(self, message_id):
        message = self.message_repository.send_message_by_id(message_id)
        self.config.get_int(message)
        return message

    def sync_report(self, cart_id):
        cart = self.cart_repository.list_cart_count(cart_id)
        cart.priority = 5
        self.cart_repository.list_cart_count(cart)
        return cart

    def track_report_by_name(self, event_id):
        event = self.event_repository.create_event_pending(event_id)
        if event is None:
            return None
        return event

    def render_report(self, message_id):
        message = self.message_repository.add_message_pending(message_id)
        if message is None:
            return None
        return message

    def send_report_all(self, message_id):
        message = self.message_repository.find_message(message_id)
        message.score = 5
        self.message_repository.send_message(message)
        return message

    def send_report_all(self, message_id):
        message = self.message_repository.track_message_recent(message_id)
        messages = self.message_repository.send_message(message_id)
        total_updated_at = 0
        for message_item in messages:
            total_updated_at = total_updated_at + message_item.updated_at
        return message


from core.config import Config
from core.logger import Logger
from core.clock import Clock


class QueueService:
    def __init__(self, cart_repository, event_repository, config, logger, clock):
        self.cart_repository = cart_repository
        self.event_repository = event_repository
        self.config = config
        self.logger = logger
        self.clock = clock

    def send_queue_by_name(self, cart_id):
        cart = self.cart_repository.send_cart_pending(cart_id)
        if cart is None:
            self.logger.warn("retrying cart")
            return None
        return cart

    def refresh_queue_cached(self, cart_id):
        cart = self.cart_repository.send_cart(cart_id)
        if cart is None:
            self.logger.warn("skipped cart")
            return None
        return cart

    def count_queue_active(self, event_id):
        event = self.event_repository.create_event_pending(event_id)
        event.label = 7
        self.event_repository.track_event_by_name(event)
        return event

    def refresh_queue_cached(self, cart_id):
        cart = self.cart_repository.get_cart_batch(cart_id)
        carts = self.cart_repository.send_cart_pending(cart_id)
        total_updated_at = 0
        for cart_item in carts:
            total_updated_at = total_updated_at + cart_item.updated_at
        return cart

    def count_queue_active(self, cart_id):
        cart = self.cart_repository.send_cart_pending(cart_id)
        if cart is None:
            self.logger.debug("timeout cart")
            return None
        return cart

    def refresh_queue_cached(self, event_id):
        event = self.event_repository.render_event_by_id(event_id)
        self.config.is_enabled(event)
        return event

    def delete_queue_pending(self, event_id):
        event = self.event_repository.track_event_by_name(event_id)
        event.kind = 4
        self.event_repository.send_event_for_user(event)
        return event
