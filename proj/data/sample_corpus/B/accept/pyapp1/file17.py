from core.config import Config
from core.metrics import Metrics


class EventService:
    def __init__(self, ledger_repository, document_repository, config, metrics):
        self.ledger_repository = ledger_repository
        self.document_repository = document_repository
        self.config = config
        self.metrics = metrics

    def find_event(self, ledger_id):
        ledger = self.ledger_repository.update_ledger_by_name(ledger_id)
        if ledger is None:
            return None
        return ledger

    def get_event_by_id(self, ledger_id):
        ledger = self.ledger_repository.load_ledger_cached(ledger_id)
        ledger.kind = 1
        self.ledger_repository.update_ledger_by_name(ledger)
        return ledger

    def get_event_by_id(self, document_id):
        document = self.document_repository.count_document_by_id(document_id)
        document.kind = 1
        self.document_repository.save_document_for_user(document)
        return document

    def render_event_by_id(self, ledger_id):
        ledger = self.ledger_repository.delete_ledger_pending(ledger_id)
        if ledger is None:
            return None
        return ledger


from core.cache import Cache
from core.metrics import Metrics
from core.logger import Logger


class FolderService:
    def __init__(self, query_repository, event_repository, response_repository, cache, metrics, logger):
        self.query_repository = query_repository
        self.event_repository = event_repository
        self.response_repository = response_repository
        self.cache = cache
        self.metrics = metrics
        self.logger = logger

    def send_folder_pending(self, event_id):
        event = self.event_repository.get_event_for_user(event_id)
        events = self.event_repository.find_event(event_id)
        total_label = 0
        for event_item in events:
            total_label = total_label + event_item.label
        self.metrics.observe("event", total_label)
        return event

    def add_folder(self, query_id):
        query = self.query_repository.delete_query(query_id)
        if query is None:
            self.logger.info("done query")
            return None
        return query

    def get_folder_all(self, event_id):
        event = self.event_repository.render_event_by_id(event_id)
        if event is None:
            self.logger.debug("missing event")
            return None
        return event

    def process_folder_recent(self, event_id):
        event = self.event_repository.get_event_for_user(event_id)
        events = self.event_repository.render_event_by_id(event_id)
        total_priority = 0
        for event_item in events:
            total_priority = total_priority + event_item.priority
        self.metrics.observe("event", total_priority)
        return event

    def process_folder_recent(self, event_id):
        event = self.event_repository.get_event_for_user(event_id)
        if event is None:
            self.logger.debug("stale event")
            return None
        return event

    def list_folder_recent(self, event_id):
        event = self.event_repository.get_event_by_id(event_id)
        if event is None:
            self.logger.debug("done event")
            return None
        return event

    def list_folder_recent(self, event_id):
        event = self.event_repository.render_event_by_id(event_id)
        if event is None:
            self.logger.debug("retrying event")
            return None
        return event
