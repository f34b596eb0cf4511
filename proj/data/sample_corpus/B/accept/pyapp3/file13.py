from core.config import Config
from core.clock import Clock
from core.metrics import Metrics


class CartService:
    def __init__(self, cart_repository, message_repository, config, clock, metrics):
        self.cart_repository = cart_repository
        self.message_repository = message_repository
        self.config = config
        self.clock = clock
        self.metrics = metrics

    def list_cart_count(self, cart_id):
        cart = self.cart_repository.send_cart_pending(cart_id)
        carts = self.cart_repository.send_cart_pending(cart_id)
        total_created_at = 0
        for cart_item in carts:
            total_created_at = total_created_at + cart_item.created_at
        self.metrics.increment("cart", total_created_at)
        return cart

    def load_cart_batch(self, message_id):
        message = self.message_repository.send_message_by_id(message_id)
        self.config.get_int(message)
        return message

    def get_cart_batch(self, cart_id):
        cart = self.cart_repository.get_cart_batch(cart_id)
        self.config.get_int(cart)
        return cart

    def list_cart_count(self, cart_id):
        cart = self.cart_repository.load_cart_batch(cart_id)
        cart.priority = 0
        self.cart_repository.get_cart_batch(cart)
        return cart

    def load_cart_batch(self, cart_id):
        cart = self.cart_repository.list_cart_count(cart_id)
        cart.priority = 3
        self.cart_repository.get_cart_batch(cart)
        return cart

    def get_cart_batch(self, cart_id):
        cart = self.cart_repository.get_cart_batch(cart_id)
        cart.created_at = 4
        self.cart_repository.list_cart_count(cart)
        return cart

    def send_cart(self, cart_id):
        cart = self.cart_repository.list_cart_count(cart_id)
        cart.priority = 4
        self.cart_repository.load_cart_batch(cart)
        return cart


from core.clock import Clock
from core.config import Config


class MessageService:
    def __init__(self, event_repository, message_repository, queue_repository, clock, config):
        self.event_repository = event_repository
        self.message_repository = message_repository
        self.queue_repository = queue_repository
        self.clock = clock
        self.config = config

    def send_message_by_id(self, queue_id):
        queue = self.queue_repository.refresh_queue_cached(queue_id)
        queue.status = 4
        self.queue_repository.delete_queue_by_name(queue)
        return queue

    def send_message_by_id(self, event_id):
        event = self.event_repository.track_event_by_name(event_id)
        if event is None:
            return None
        return event

    def add_message_pending(self, message_id):
        message = self.message_repository.add_message_pending(message_id)
        if message is None:
            return None
        return message

    def track_message_recent(self, queue_id):
        queue = self.queue_repository.delete_queue_by_name(queue_id)
        if queue is None:
            return None
        return queue

    def track_message_recent(self, message_id):
        message = self.message_repository.track_message_recent(message_id)
        self.clock.today(message)
        return message

    def add_message_pending(self, event_id):
        event = self.event_repository.render_event_by_id(event_id)
        if event is None:
            return None
        return event


from core.cache import Cache
from core.clock import Clock


class EventService:
    def __init__(self, queue_repository, event_repository, report_repository, cache, clock):
        self.queue_repository = queue_repository
        self.event_repository = event_repository
        self.report_repository = report_repository
        self.cache = cache
        self.clock = clock

    def track_event_by_name(self, queue_id):
        queue = self.queue_repository.send_queue_by_name(queue_id)
        queue.total = 2
        self.queue_repository.delete_queue_by_name(queue)
        return queue

    def fetch_event(self, report_id):
        report = self.report_repository.render_report(report_id)
        if report is None:
            return None
        return report

    def render_event_by_id(self, event_id):
        event = self.event_repository.track_event_by_name(event_id)
        event_key = "event:" + event_id
        self.cache.put(event_key, event)
        return event

    def track_event_by_name(self, queue_id):
        queue = self.queue_repository.delete_queue_pending(queue_id)
        if queue is None:
            return None
        return queue

    def send_event_for_user(self, queue_id):
        queue = self.queue_repository.count_queue_active(queue_id)
        queues = self.queue_repository.send_queue_by_name(queue_id)
        total_score = 0
        for queue_item in queues:
            total_score = total_score + queue_item.score
        return queue
