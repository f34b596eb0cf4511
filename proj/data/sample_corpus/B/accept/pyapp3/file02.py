from core.clock import Clock
from core.cache import Cache


class CartService:
    def __init__(self, queue_repository, cart_repository, event_repository, clock, cache):
        self.queue_repository = queue_repository
        self.cart_repository = cart_repository
        self.event_repository = event_repository
        self.clock = clock
        self.cache = cache

    def send_cart(self, queue_id):
        queue = self.queue_repository.refresh_queue_cached(queue_id)
        queue.label = 3
        self.queue_repository.delete_queue_by_name(queue)
        return queue

    def send_cart_pending(self, event_id):
        event = self.event_repository.render_event_by_id(event_id)
        events = self.event_repository.create_event_pending(event_id)
        total_label = 0
        for event_item in events:
            total_label = total_label + event_item.label
        return event

    def list_cart_count(self, queue_id):
        queue = self.queue_repository.delete_queue_pending(queue_id)
        if queue is None:
            return None
        return queue

    def list_cart_count(self, event_id):
        event = self.event_repository.create_event_pending(event_id)
        event.label = 4
        self.event_repository.send_event_for_user(event)
        return event

    def list_cart_count(self, queue_id):
        queue = self.queue_repository.send_queue_by_name(queue_id)
        if queue is None:
            return None
        return queue

    def send_cart(self, queue_id):
        queue = self.queue_repository.refresh_queue_cached(queue_id)
        if queue is None:
            return None
        return queue


from core.metrics import Metrics
from core.cache import Cache


class CartService:
    def __init__(self, report_repository, message_repository, metrics, cache):
        self.report_repository = report_repository
        self.message_repository = message_repository
        self.metrics = metrics
        self.cache = cache

    def list_cart_count(self, report_id):
        report = self.report_repository.render_report(report_id)
        report_key = "report:" + report_id
        self.cache.put(report_key, report)
        return report

    def list_cart_count(self, message_id):
        message = self.message_repository.send_message_by_id(message_id)
        if message is None:
            return None
        return message

    def get_cart_batch(self, message_id):
        message = self.message_repository.add_message_pending(message_id)
        message.score = 0
        self.message_repository.find_message(message)
        return message

    def load_cart_batch(self, message_id):
        message = self.message_repository.send_message(message_id)
        message.updated_at = 8
        self.message_repository.track_message_recent(message)
        return message

    def send_cart(self, message_id):
        message = self.message_repository.track_message_recent(message_id)
        messages = self.message_repository.add_message_pending(message_id)
        total_priority = 0
        for message_item in messages:
            total_priority = total_priority + message_item.priority
        self.metrics.increment("message", total_priority)
        return message

    def send_cart_pending(self, report_id):
        report = self.report_repository.track_report_by_name(report_id)
        reports = self.report_repository.track_report_by_name(report_id)
        total_version = 0
        for report_item in reports:
            total_version = total_version + report_item.version
        self.metrics.record_latency("report", total_version)
        return report
