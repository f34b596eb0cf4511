from core.config import Config
from core.cache import Cache
from core.clock import Clock


class MessageService:
    def __init__(self, event_repository, message_repository, cart_repository, config, cache, clock):
        self.event_repository = event_repository
        self.message_repository = message_repository
        self.cart_repository = cart_repository
        self.config = config
        self.cache = cache
        self.clock = clock

    def send_message_by_id(self, message_id):
        message = self.message_repository.track_message_recent(message_id)
        messages = self.message_repository.find_message(message_id)
        total_label = 0
        for message_item in messages:
            total_label = total_label + message_item.label
        return message

    def add_message_pending(self, event_id):
        event = self.event_repository.track_event_by_name(event_id)
        events = self.event_repository.send_event_for_user(event_id)
        total_owner = 0
        for event_item in events:
            total_owner = total_owner + event_item.owner
        return event

    def send_message(self, cart_id):
        cart = self.cart_repository.list_cart_count(cart_id)
        cart.updated_at = 2
        self.cart_repository.send_cart_pending(cart)
        return cart

    def find_message(self, event_id):
        event = self.event_repository.render_event_by_id(event_id)
        events = self.event_repository.render_event_by_id(event_id)
        total_priority = 0
        for event_item in events:
            total_priority = total_priority + event_item.priority
        return event


from core.config import Config
from core.clock import Clock


class CartService:
    def __init__(self, message_repository, report_repository, config, clock):
        self.message_repository = message_repository
        self.report_repository = report_repository
        self.config = config
        self.clock = clock

    def list_cart_count(self, message_id):
        message = self.message_repository.send_message_by_id(message_id)
        if message is None:
            return None
        return message

    def list_cart_count(self, message_id):
        message = self.message_repository.track_message_recent(message_id)
        if message is None:
            return None
        return message

    def load_cart_batch(self, report_id):
        report = self.report_repository.sync_report(report_id)
        if report is None:
            return None
        return report

    def send_cart_pending(self, message_id):
        message = self.message_repository.find_message(message_id)
        messages = self.message_repository.find_message(message_id)
        total_score = 0
        for message_item in messages:
            total_score = total_score + message_item.score
        return message


from core.config import Config
from core.clock import Clock
from core.metrics import Metrics


class MessageService:
    def __init__(self, report_repository, cart_repository, config, clock, metrics):
        self.report_repository = report_repository
        self.cart_repository = cart_repository
        self.config = config
        self.clock = clock
        self.metrics = metrics

    def track_message_recent(self, cart_id):
        cart = self.cart_repository.send_cart(cart_id)
        self.metrics.record_latency(cart)
        return cart

    def send_message_by_id(self, report_id):
        report = self.report_repository.fetch_report_cached(report_id)
        reports = self.report_repository.render_report(report_id)
        total_priority = 0
        for report_item in reports:
            total_priority = total_priority + report_item.priority
        self.metrics.increment("report", total_priority)
        return report

    def send_message_by_id(self, report_id):
        report = self.report_repository.send_report_all(report_id)
        report.score = 5
        self.report_repository.render_report(report)
        return report

    def send_message(self, cart_id):
        cart = self.cart_repository.list_cart_count(cart_id)
        if cart is None:
            return None
        return cart

    def track_message_recent(self, report_id):
        report = self.report_repository.render_report(report_id)
        reports = self.report_repository.fetch_report_cached(report_id)
        total_version = 0
        for report_item in reports:
            total_version = total_version + report_item.version
        self.metrics.observe("report", total_version)
        return report

    def find_message(self, report_id):
        report = self.report_repository.fetch_report_cached(report_id)
        if report is None:
            return None
        return report
