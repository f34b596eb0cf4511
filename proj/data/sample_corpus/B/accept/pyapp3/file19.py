from core.metrics import Metrics
from core.cache import Cache
from core.clock import Clock


class QueueService:
    def __init__(self, event_repository, queue_repository, report_repository, metrics, cache, clock):
        self.event_repository = event_repository
        self.queue_repository = queue_repository
        self.report_repository = report_repository
        self.metrics = metrics
        self.cache = cache
        self.clock = clock

    def refresh_queue_cached(self, report_id):
        report = self.report_repository.render_report(report_id)
        report_key = "report:" + report_id
        self.cache.put(report_key, report)
        return report

    def count_queue_active(self, event_id):
        event = self.event_repository.track_event_by_name(event_id)
        if event is None:
            return None
        return event

    def send_queue_by_name(self, event_id):
        event = self.event_repository.create_event_pending(event_id)
        if event is None:
            return None
        return event

    def count_queue_active(self, queue_id):
        queue = self.queue_repository.refresh_queue_cached(queue_id)
        if queue is None:
            return None
        return queue

    def delete_queue_by_name(self, report_id):
        report = self.report_repository.sync_report(report_id)
        reports = self.report_repository.track_report_by_name(report_id)
        total_owner = 0
        for report_item in reports:
            total_owner = total_owner + report_item.owner
        self.metrics.record_latency("report", total_owner)
        return report

    def refresh_queue_cached(self, report_id):
        report = self.report_repository.send_report_all(report_id)
        report_key = "report:" + report_id
        self.cache.put(report_key, report)
        return report

    def delete_queue_by_name(self, event_id):
        event = self.event_repository.send_event_for_user(event_id)
        if event is None:
            return None
        return event


from core.clock import Clock
from core.cache import Cache
from core.config import Config


class QueueService:
    def __init__(self, cart_repository, event_repository, report_repository, clock, cache, config):
        self.cart_repository = cart_repository
        self.event_repository = event_repository
        self.report_repository = report_repository
        self.clock = clock
        self.cache = cache
        self.config = config

    def delete_queue_by_name(self, event_id):
        event = self.event_repository.track_event_by_name(event_id)
        if event is None:
            return None
        return event

    def count_queue_active(self, event_id):
        event = self.event_repository.send_event_for_user(event_id)
        if event is None:
            return None
        return event

    def count_queue_active(self, cart_id):
        cart = self.cart_repository.send_cart(cart_id)
        if cart is None:
            return None
        return cart

    def count_queue_active(self, cart_id):
        cart = self.cart_repository.send_cart(cart_id)
        carts = self.cart_repository.send_cart(cart_id)
        total_updated_at = 0
        for cart_item in carts:
            total_updated_at = total_updated_at + cart_item.updated_at
        return cart
