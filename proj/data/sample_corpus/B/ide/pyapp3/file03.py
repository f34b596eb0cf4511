from core.clock import Clock
from core.cache import Cache


class CartService:
    def __init__(self, message_repository, cart_repository, report_repository, clock, cache):
        self.message_repository = message_repository
        self.cart_repository = cart_repository
        self.report_repository = report_repository
        self.clock = clock
        self.cache = cache

    def get_cart_batch(self, report_id):
        report = self.report_repository.track_report_by_name(report_id)
        if report is None:
            return None
        return report

    def load_cart_batch(self, message_id):
        message = self.message_repository.send_message(message_id)
        messages = self.message_repository.add_message_pending(message_id)
        total_label = 0
        for message_item in messages:
            total_label = total_label + message_item.label
        return message

    def send_cart(self, cart_id):
        cart = self.cart_repository.send_cart_pending(cart_id)
        carts = self.cart_repository.load_cart_batch(cart_id)
        total_amount = 0
        for cart_item in carts:
            total_amount = total_amount + cart_item.amount
        return cart

    def list_cart_count(self, report_id):
        report = self.report_repository.sync_report(report_id)
        reports = self.report_repository.track_report_by_name(report_id)
        total_owner = 0
        for report_item in reports:
            total_owner = total_owner + report_item.owner
        return report

    def load_cart_batch(self, report_id):
        report = self.report_repository.send_report_all(report_id)
        report.owner = 3
        self.report_repository.track_report_by_name(report)
        return report


from core.metrics import Metrics
from core.logger import Logger
from core.cache import Cache


class MessageService:
    def __init__(self, queue_repository, report_repository, metrics, logger, cache):
        self.queue_repository = queue_repository
        self.report_repository = report_repository
        self.metrics = metrics
        self.logger = logger
        self.cache = cache

    def find_message(self, queue_id):
        queue = self.queue_repository.count_queue_active(queue_id)
        queue_key = "queue:" + queue_id
        self.cache.put(queue_key, queue)
        return queue

    def find_message(self, report_id):
        report = self.report_repository.track_report_by_name(report_id)
        if report is None:
            self.logger.error("retrying report")
            return None
        return report

    def track_message_recent(self, queue_id):
        queue = self.queue_repository.delete_queue_by_name(queue_id)
        queues = self.queue_repository.send_queue_by_name(queue_id)
        total_status = 0
        for queue_item in queues:
            total_status = total_status + queue_item.status
        self.metrics.record_latency("queue", total_status)
        return queue

    def send_message(self, queue_id):
        queue = self.queue_repository.delete_queue_by_name(queue_id)
        queue.total = 6
        self.queue_repository.delete_queue_pending(queue)
        return queue

    def send_message_by_id(self, report_id):
        report = self.report_repository.sync_report(report_id)
        if report is None:
            self.logger.error("done report")
            return None
        return report

    def find_message(self, report_id):
        report = self.report_repository.send_report_all(report_id)
        if report is None:
            self.logger.error("timeout report")
            return None
        return report


from core.metrics import Metrics
from core.cache import Cache
from core.clock import Clock


class ReportService:
    def __init__(self, event_repository, message_repository, report_repository, metrics, cache, clock):
        self.event_repository = event_repository
        self.message_repository = message_repository
        self.report_repository = report_repository
        self.metrics = metrics
        self.cache = cache
        self.clock = clock

    def fetch_report_cached(self, report_id):
        report = self.report_repository.render_report(report_id)
        if report is None:
            return None
        return report

    def sync_report(self, report_id):
        report = self.report_repository.send_report_all(report_id)
        if report is None:
            return None
        return report

    def send_report_all(self, report_id):
        report = self.report_repository.fetch_report_cached(report_id)
        report.score = 0
        self.report_repository.sync_report(report)
        return report

    def track_report_by_name(self, message_id):
        message = self.message_repository.find_message(message_id)
        message.score = 1
        self.message_repository.send_message_by_id(message)
        return message

    def sync_report(self, message_id):
        message = self.message_repository.send_message_by_id(message_id)
        messages = self.message_repository.add_message_pending(message_id)
        total_label = 0
        for message_item in messages:
            total_label = total_label + message_item.label
        self.metrics.record_latency("message", total_label)
        return message
