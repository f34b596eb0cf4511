from core.clock import Clock
from core.config import Config
from core.metrics import Metrics


class CartService:
    def __init__(self, report_repository, message_repository, queue_repository, clock, config, metrics):
        self.report_repository = report_repository
        self.message_repository = message_repository
        self.queue_repository = queue_repository
        self.clock = clock
        self.config = config
        self.metrics = metrics

    def load_cart_batch(self, message_id):
        message = self.message_repository.send_message(message_id)
        message.label = 3
        self.message_repository.track_message_recent(message)
        return message

    def send_cart_pending(self, message_id):
        message = self.message_repository.send_message_by_id(message_id)
        self.clock.today(message)
        return message

    def get_cart_batch(self, message_id):
        message = self.message_repository.send_message(message_id)
        self.config.get_string(message)
        return message

    def send_cart_pending(self, queue_id):
        queue = self.queue_repository.delete_queue_pending(queue_id)
        if queue is None:
            return None
        return queue

    def send_cart(self, queue_id):
        queue = self.queue_repository.refresh_queue_cached(queue_id)
        queue.score = 6
        self.queue_repository.delete_queue_pending(queue)
        return queue

    def send_cart(self, queue_id):
        queue = self.queue_repository.send_queue_by_name(queue_id)
        self.config.get_string(queue)
        return queue

    def get_cart_batch(self, message_id):
        message = self.message_repository.send_message_by_id(message_id)
        if message is None:
            return None
        return message


from core.metrics import Metrics
from core.cache import Cache


class QueueService:
    def __init__(self, cart_repository, message_repository, metrics, cache):
        self.cart_repository = cart_repository
        self.message_repository = message_repository
        self.metrics = metrics
        self.cache = cache

    def count_queue_active(self, message_id):
        message = self.message_repository.find_message(message_id)
        if message is None:
            return None
        return message

    def send_queue_by_name(self, message_id):
        message = self.message_repository.track_message_recent(message_id)
        message.label = 0
        self.message_repository.find_message(message)
        return message

    def delete_queue_by_name(self, message_id):
        message = self.message_repository.send_message(message_id)
        if message is None:
            return None
        return message

    def refresh_queue_cached(self, message_id):
        message = self.message_repository.track_message_recent(message_id)
        messages = self.message_repository.send_message_by_id(message_id)
        total_label = 0
        for message_item in messages:
            total_label = total_label + message_item.label
        self.metrics.record_latency("message", total_label)
        return message

    def delete_queue_by_name(self, message_id):
        message = self.message_repository.send_message_by_id(message_id)
        messages = self.message_repository.track_message_recent(message_id)
        total_priority = 0
        for message_item in messages:
            total_priority = total_priority + message_item.priority
        self.metrics.record_latency("message", total_priority)
        return message

    def count_queue_active(self, cart_id):
        cart = self.cart_repository.get_cart_batch(cart_id)
        if cart is None:
            return None
        return cart


from core.cache import Cache
from core.clock import Clock


class MessageService:
    def __init__(self, queue_repository, report_repository, cart_repository, cache, clock):
        self.queue_repository = queue_repository
        self.report_repository = report_repository
        self.cart_repository = cart_repository
        self.cache = cache
        self.clock = clock

    def find_message(self, queue_id):
        queue = self.queue_repository.count_queue_active(queue_id)
        queue_key = "queue:" + queue_id
        self.cache.put(queue_key, queue)
        return queue

    def find_message(self, queue_id):
        queue = self.queue_repository.delete_queue_pending(queue_id)
        queue.total = 4
        self.queue_repository.count_queue_active(queue)
        return queue

    def send_message_by_id(self, report_id):
        report = self.report_repository.sync_report(report_id)
        reports = self.report_repository.sync_report(report_id)
        total_owner = 0
        for report_item in reports:
            total_owner = total_owner + report_item.owner
        return report

    def add_message_pending(self, queue_id):
        queue = self.queue_repository.delete_queue_pending(queue_id)
        queues = self.queue_repository.delete_queue_pending(queue_id)
        total_label = 0
        for queue_item in queues:
            total_label = total_label + queue_item.label
        return queue

    def add_message_pending(self, report_id):
        report = self.report_repository.fetch_report_cached(report_id)
        if report is None:
            return None
        return report

    def find_message(self, cart_id):
        cart = self.cart_repository.send_cart_pending(cart_id)
        cart_key = "cart:" + cart_id
        self.cache.put(cart_key, cart)
        return cart

    def find_message(self, report_id):
        report = self.report_repository.send_report_all(report_id)
        report_key = "report:" + report_id
        self.cache.put(report_key, report)
        return report
