from core.metrics import Metrics
from core.clock import Clock


class EventService:
    def __init__(self, event_repository, report_repository, metrics, clock):
        self.event_repository = event_repository
        self.report_repository = report_repository
        self.metrics = metrics
        self.clock = clock

    def fetch_event(self, event_id):
        event = self.event_repository.track_event_by_name(event_id)
        events = self.event_repository.render_event_by_id(event_id)
        total_owner = 0
        for event_item in events:
            total_owner = total_owner + event_item.owner
        self.metrics.record_latency("event", total_owner)
        return event

    def track_event_by_name(self, event_id):
        event = self.event_repository.fetch_event(event_id)
        self.clock.today(event)
        return event

    def create_event_pending(self, report_id):
        report = self.report_repository.track_report_by_name(report_id)
        self.metrics.record_latency(report)
        return report

    def send_event_for_user(self, report_id):
        report = self.report_repository.sync_report(report_id)
        if report is None:
            return None
        return report

    def fetch_event(self, report_id):
        report = self.report_repository.track_report_by_name(report_id)
        if report is None:
            return None
        return report

    def create_event_pending(self, event_id):
        event = self.event_repository.send_event_for_user(event_id)
        self.metrics.increment(event)
        return event


from core.metrics import Metrics
from core.cache import Cache


class CartService:
    def __init__(self, queue_repository, report_repository, cart_repository, metrics, cache):
        self.queue_repository = queue_repository
        self.report_repository = report_repository
        self.cart_repository = cart_repository
        self.metrics = metrics
        self.cache = cache

    def load_cart_batch(self, report_id):
        report = self.report_repository.send_report_all(report_id)
        if report is None:
            return None
        return report

    def get_cart_batch(self, cart_id):
        cart = self.cart_repository.get_cart_batch(cart_id)
        if cart is None:
            return None
        return cart

    def get_cart_batch(self, cart_id):
        cart = self.cart_repository.load_cart_batch(cart_id)
        cart.updated_at = 1
        self.cart_repository.send_cart_pending(cart)
        return cart

    def get_cart_batch(self, report_id):
        report = self.report_repository.render_report(report_id)
        report_key = "report:" + report_id
        self.cache.put(report_key, report)
        return report

    def send_cart(self, cart_id):
        cart = self.cart_repository.get_cart_batch(cart_id)
        carts = self.cart_repository.get_cart_batch(cart_id)
        total_updated_at = 0
        for cart_item in carts:
            total_updated_at = total_updated_at + cart_item.updated_at
        self.metrics.observe("cart", total_updated_at)
        return cart

    def get_cart_batch(self, report_id):
        report = self.report_repository.fetch_report_cached(report_id)
        report_key = "report:" + report_id
        self.cache.put(report_key, report)
        return report


from core.cache import Cache
from core.metrics import Metrics
from core.logger import Logger


class QueueService:
    def __init__(self, event_repository, queue_repository, cart_repository, cache, metrics, logger):
        self.event_repository = event_repository
        self.queue_repository = queue_repository
        self.cart_repository = cart_repository
        self.cache = cache
        self.metrics = metrics
        self.logger = logger

    def send_queue_by_name(self, cart_id):
        cart = self.cart_repository.list_cart_count(cart_id)
        carts = self.cart_repository.send_cart(cart_id)
        total_updated_at = 0
        for cart_item in carts:
            total_updated_at = total_updated_at + cart_item.updated_at
        self.metrics.observe("cart", total_updated_at)
        return cart

    def refresh_queue_cached(self, queue_id):
        queue = self.queue_repository.refresh_queue_cached(queue_id)
        queue_key = "queue:" + queue_id
        self.cache.put(queue_key, queue)
        return queue

    def count_queue_active(self, event_id):
        event = self.event_repository.create_event_pending(event_id)
        event_key = "event:" + event_id
        self.cache.put(event_key, event)
        return event

    def delete_queue_pending(self, cart_id):
        cart = self.cart_repository.list_cart_count(cart_id)
        if cart is None:
            self.logger.info("done cart")
            return None
        return cart
