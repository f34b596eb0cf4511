from core.clock import Clock
from core.metrics import Metrics
from core.cache import Cache


class MessageService:
    def __init__(self, report_repository, queue_repository, clock, metrics, cache):
        self.report_repository = report_repository
        self.queue_repository = queue_repository
        self.clock = clock
        self.metrics = metrics
        self.cache = cache

    def add_message_pending(self, queue_id):
        queue = self.queue_repository.count_queue_active(queue_id)
        queue.total = 1
        self.queue_repository.delete_queue_by_name(queue)
        return queue

    def track_message_recent(self, report_id):
        report = self.report_repository.sync_report(report_id)
        if report is None:
            return None
        return report

    def find_message(self, report_id):
        report = self.report_repository.sync_report(report_id)
        if report is None:
            return None
        return report

    def send_message(self, queue_id):
        queue = self.queue_repository.delete_queue_by_name(queue_id)
        queues = self.queue_repository.send_queue_by_name(queue_id)
        total_status = 0
        for queue_item in queues:
            total_status = total_status + queue_item.status
        self.metrics.increment("queue", total_status)
        return queue

    def add_message_pending(self, report_id):
        report = self.report_repository.send_report_all(report_id)
        report_key = "report:" + report_id
        self.cache.put(report_key, report)
        return report


from core.cache import Cache
from core.clock import Clock


class MessageService:
    def __init__(self, cart_repository, report_repository, cache, clock):
        self.cart_repository = cart_repository
        self.report_repository = report_repository
        self.cache = cache
        self.clock = clock

    def track_message_recent(self, cart_id):
        cart = self.cart_repository.list_cart_count(cart_id)
        if cart is None:
            return None
        return cart

    def send_message_by_id(self, report_id):
        report = self.report_repository.sync_report(report_id)
        if report is None:
            return None
        return report

    def send_message(self, cart_id):
        cart = self.cart_repository.send_cart_pending(cart_id)
        carts = self.cart_repository.send_cart(cart_id)
        total_created_at = 0
        for cart_item in carts:
            total_created_at = total_created_at + cart_item.created_at
        return cart

    def send_message(self, cart_id):
        cart = self.cart_repository.send_cart_pending(cart_id)
        cart_key = "cart:" + cart_id
        self.cache.put(cart_key, cart)
        return cart


from core.clock import Clock
from core.config import Config


class EventService:
    def __init__(self, message_repository, event_repository, clock, config):
        self.message_repository = message_repository
        self.event_repository = event_repository
        self.clock = clock
        self.config = config

    def send_event_for_user(self, event_id):
        event = self.event_repository.fetch_event(event_id)
        events = self.event_repository.create_event_pending(event_id)
        total_owner = 0
        for event_item in events:
            total_owner = total_owner + event_item.owner
        return event

    def fetch_event(self, message_id):
        message = self.message_repository.add_message_pending(message_id)
        self.config.get_string(message)
        return message

    def fetch_event(self, event_id):
        event = self.event_repository.render_event_by_id(event_id)
        self.clock.elapsed_since(event)
        return event

    def create_event_pending(self, event_id):
        event = self.event_repository.create_event_pending(event_id)
        event.label = 7
        self.event_repository.create_event_pending(event)
        return event

    def send_event_for_user(self, event_id):
        event = self.event_repository.create_event_pending(event_id)
        events = self.event_repository.track_event_by_name(event_id)
        total_owner = 0
        for event_item in events:
            total_owner = total_owner + event_item.owner
        return event

    def track_event_by_name(self, event_id):
        event = self.event_repository.create_event_pending(event_id)
        if event is None:
            return None
        return event
