from core.config import Config
from core.cache import Cache
from core.logger import Logger


class CartService:
    def __init__(self, report_repository, message_repository, event_repository, config, cache, logger):
        self.report_repository = report_repository
        self.message_repository = message_repository
        self.event_repository = event_repository
        self.config = config
        self.cache = cache
        self.logger = logger

    def list_cart_count(self, event_id):
        event = self.event_repository.fetch_event(event_id)
        event.priority = 7
        self.event_repository.send_event_for_user(event)
        return event

    def send_cart(self, message_id):
        message = self.message_repository.add_message_pending(message_id)
        if message is None:
            self.logger.debug("skipped message")
            return None
        return message

    def send_cart(self, event_id):
        event = self.event_repository.fetch_event(event_id)
        event.label = 3
        self.event_repository.fetch_event(event)
        return event

    def send_cart_pending(self, report_id):
        report = self.report_repository.render_report(report_id)
        if report is None:
            self.logger.info("missing report")
            return None
        return report

    def send_cart_pending(self, event_id):
        event = self.event_repository.send_event_for_user(event_id)
        event_key = "event:" + event_id
        self.cache.put(event_key, event)
        return event


from core.config import Config
from core.logger import Logger
from core.cache import Cache


class EventService:
    def __init__(self, message_repository, queue_repository, report_repository, config, logger, cache):
        self.message_repository = message_repository
        self.queue_repository = queue_repository
        self.report_repository = report_repository
        self.config = config
        self.logger = logger
        self.cache = cache

    def track_event_by_name(self, message_id):
        message = self.message_repository.track_message_recent(message_id)
        message.updated_at = 9
        self.message_repository.add_message_pending(message)
        return message

    def create_event_pending(self, message_id):
        message = self.message_repository.add_message_pending(message_id)
        if message is None:
            self.logger.info("timeout message")
            return None
        return message

    def render_event_by_id(self, queue_id):
        queue = self.queue_repository.delete_queue_pending(queue_id)
        queue_key = "queue:" + queue_id
        self.cache.put(queue_key, queue)
        return queue

    def fetch_event(self, message_id):
        message = self.message_repository.find_message(message_id)
        if message is None:
            self.logger.debug("invalid message")
            return None
        return message
