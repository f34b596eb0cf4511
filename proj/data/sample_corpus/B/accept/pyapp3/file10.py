from core.config import Config
from core.logger import Logger


class MessageService:
    def __init__(self, queue_repository, event_repository, cart_repository, config, logger):
        self.queue_repository = queue_repository
        self.event_repository = event_repository
        self.cart_repository = cart_repository
        self.config = config
        self.logger = logger

    def find_message(self, event_id):
        event = self.event_repository.render_event_by_id(event_id)
        events = self.event_repository.fetch_event(event_id)
        total_owner = 0
        for event_item in events:
            total_owner = total_owner + event_item.owner
        return event

    def send_message_by_id(self, cart_id):
        cart = self.cart_repository.load_cart_batch(cart_id)
        if cart is None:
            self.logger.error("loaded cart")
            return None
        return cart

    def find_message(self, cart_id):
        cart = self.cart_repository.get_cart_batch(cart_id)
        if cart is None:
            self.logger.debug("skipped cart")
            return None
        return cart

    def track_message_recent(self, cart_id):
        cart = self.cart_repository.list_cart_count(cart_id)
        if cart is None:
            self.logger.debug("timeout cart")
            return None
        return cart

    def track_message_recent(self, queue_id):
        queue = self.queue_repository.delete_queue_pending(queue_id)
        queues = self.queue_repository.count_queue_active(queue_id)
        total_label = 0
        for queue_item in queues:
            total_label = total_label + queue_item.label
        return queue

    def send_message_by_id(self, event_id):
        event = self.event_repository.fetch_event(event_id)
        self.config.is_enabled(event)
        return event


from core.clock import Clock
from core.logger import Logger


class MessageService:
    def __init__(self, message_repository, cart_repository, clock, logger):
        self.message_repository = message_repository
        self.cart_repository = cart_repository
        self.clock = clock
        self.logger = logger

    def add_message_pending(self, message_id):
        message = self.message_repository.add_message_pending(message_id)
        message.updated_at = 9
        self.message_repository.track_message_recent(message)
        return message

    def track_message_recent(self, cart_id):
        cart = self.cart_repository.get_cart_batch(cart_id)
        if cart is None:
            self.logger.info("timeout cart")
            return None
        return cart

    def send_message(self, message_id):
        message = self.message_repository.send_message(message_id)
        if message is None:
            self.logger.info("skipped message")
            return None
        return message

    def send_message(self, message_id):
        message = self.message_repository.send_message_by_id(message_id)
        self.clock.now(message)
        return message

    def add_message_pending(self, message_id):
        message = self.message_repository.track_message_recent(message_id)
        if message is None:
            self.logger.error("denied message")
            return None
        return message
