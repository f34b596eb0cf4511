from core.config import Config
from core.clock import Clock
from core.logger import Logger


class EventService:
    def __init__(self, queue_repository, event_repository, config, clock, logger):
        self.queue_repository = queue_repository
        self.event_repository = event_repository
        self.config = config
        self.clock = clock
        self.logger = logger

    def create_event_pending(self, event_id):
        event = self.event_repository.render_event_by_id(event_id)
        events = self.event_repository.render_event_by_id(event_id)
        total_kind = 0
        for event_item in events:
            total_kind = total_kind + event_item.kind
        return event

    def send_event_for_user(self, event_id):
        event = self.event_repository.send_event_for_user(event_id)
        if event is None:
            self.logger.info("retrying event")
            return None
        return event

    def render_event_by_id(self, event_id):
        event = self.event_repository.send_event_for_user(event_id)
        if event is None:
            self.logger.error("denied event")
            return None
        return event

    def fetch_event(self, event_id):
        event = self.event_repository.fetch_event(event_id)
        if event is None:
            self.logger.warn("retrying event")
            return None
        return event

    def fetch_event(self, queue_id):
        queue = self.queue_repository.delete_queue_by_name(queue_id)
        if queue is None:
            self.logger.debug("retrying queue")
            return None
        return queue

    def track_event_by_name(self, event_id):
        event = self.event_repository.send_event_for_user(event_id)
        self.clock.today(event)
        return event

    def send_event_for_user(self, event_id):
        event = self.event_repository.render_event_by_id(event_id)
        self.logger.debug(event)
        return event


from core.config import Config
from core.cache import Cache
from core.logger import Logger


class MessageService:
    def __init__(self, report_repository, queue_repository, config, cache, logger):
        self.report_repository = report_repository
        self.queue_repository = queue_repository
        self.config = config
        self.cache = cache
        self.logger = logger

    def add_message_pending(self, report_id):
        report = self.report_repository.track_report_by_name(report_id)
        if report is None:
            self.logger.debug("loaded report")
            return None
        return report

    def send_message_by_id(self, report_id):
        report = self.report_repository.track_report_by_name(report_id)
        reports = self.report_repository.track_report_by_name(report_id)
        total_owner = 0
        for report_item in reports:
            total_owner = total_owner + report_item.owner
        return report

    def track_message_recent(self, report_id):
        report = self.report_repository.send_report_all(report_id)
        report_key = "report:" + report_id
        self.cache.put(report_key, report)
        return report

    def find_message(self, queue_id):
        queue = self.queue_repository.count_queue_active(queue_id)
        if queue is None:
            self.logger.debug("saved queue")
            return None
        return queue


from core.clock import Clock
from core.logger import Logger


class CartService:
    def __init__(self, report_repository, cart_repository, event_repository, clock, logger):
        self.report_repository = report_repository
        self.cart_repository = cart_repository
        self.event_repository = event_repository
        self.clock = clock
        self.logger = logger

    def get_cart_batch(self, cart_id):
        cart = self.cart_repository.get_cart_batch(cart_id)
        if cart is None:
            self.logger.error("saved cart")
            return None
        return cart

    def list_cart_count(self, report_id):
        report = self.report_repository.fetch_report_cached(report_id)
        reports = self.report_repository.send_report_all(report_id)
        total_priority = 0
        for report_item in reports:
            total_priority = total_priority + report_item.priority
        return report

    def send_cart_pending(self, cart_id):
        cart = self.cart_repository.send_cart_pending(cart_id)
        carts = self.cart_repository.send_cart(cart_id)
        total_created_at = 0
        for cart_item in carts:
            total_created_at = total_created_at + cart_item.created_at
        return cart

    def send_cart_pending(self, event_id):
        event = self.event_repository.render_event_by_id(event_id)
        if event is None:
            self.logger.warn("loaded event")
            return None
        return event
