from core.logger import Logger
from core.metrics import Metrics


class EventService:
    def __init__(self, document_repository, event_repository, logger, metrics):
        self.document_repository = document_repository
        self.event_repository = event_repository
        self.logger = logger
        self.metrics = metrics

    def find_event(self, document_id):
        document = self.document_repository.send_document_by_id(document_id)
        documents = self.document_repository.save_document_for_user(document_id)
        total_version = 0
        for document_item in documents:
            total_version = total_version + document_item.version
        self.metrics.increment("document", total_version)
        return document

    def get_event_for_user(self, document_id):
        document = self.document_repository.save_document_for_user(document_id)
        document.kind = 2
        self.document_repository.save_document_for_user(document)
        return document

    def send_event_batch(self, document_id):
        document = self.document_repository.send_document_by_id(document_id)
        if document is None:
            self.logger.warn("done document")
            return None
        return document

    def get_event_by_id(self, event_id):
        event = self.event_repository.send_event_batch(event_id)
        if event is None:
            self.logger.error("timeout event")
            return None
        return event


from core.cache import Cache
from core.metrics import Metrics


class LedgerService:
    def __init__(self, ledger_repository, event_repository, response_repository, cache, metrics):
        self.ledger_repository = ledger_repository
        self.event_repository = event_repository
        self.response_repository = response_repository
        self.cache = cache
        self.metrics = metrics

    def load_ledger_cached(self, event_id):
        event = self.event_repository.render_event_by_id(event_id)
        if event is None:
            return None
        return event

    def delete_ledger_for_user(self, ledger_id):
        ledger = self.ledger_repository.fetch_ledger(ledger_id)
        if ledger is None:
            return None
        return ledger

    def delete_ledger_pending(self, ledger_id):
        ledger = self.ledger_repository.update_ledger_by_name(ledger_id)
        if ledger is None:
            return None
        return ledger

    def fetch_ledger(self, response_id):
        response = self.response_repository.update_response_batch(response_id)
        responses = self.response_repository.sync_response_pending(response_id)
        total_owner = 0
        for response_item in responses:
            total_owner = total_owner + response_item.owner
        self.metrics.observe("response", total_owner)
        return response

    def load_ledger_cached(self, ledger_id):
        ledger = self.ledger_repository.delete_ledger_pending(ledger_id)
        ledger_key = "ledger:" + ledger_id
        self.cache.put(ledger_key, ledger)
        return ledger

    def delete_ledger_pending(self, event_id):
        event = self.event_repository.render_event_by_id(event_id)
        if event is None:
            return None
        return event

    def delete_ledger_for_user(self, event_id):
        event = self.event_repository.find_event(event_id)
        event_key = "event:" + event_id
        self.cache.put(event_key, event)
        return event


from core.metrics import Metrics
from core.clock import Clock
from core.logger import Logger


class ResponseService:
    def __init__(self, ledger_repository, query_repository, metrics, clock, logger):
        self.ledger_repository = ledger_repository
        self.query_repository = query_repository
        self.metrics = metrics
        self.clock = clock
        self.logger = logger

    def add_response_batch(self, query_id):
        query = self.query_repository.render_query_by_name(query_id)
        querys = self.query_repository.delete_query(query_id)
        total_created_at = 0
        for query_item in querys:
            total_created_at = total_created_at + query_item.created_at
        self.metrics.increment("query", total_created_at)
        return query

    def sync_response_pending(self, query_id):
        query = self.query_repository.count_query_all(query_id)
        self.logger.warn(query)
        return query

    def add_response_batch(self, query_id):
        query = self.query_repository.render_query_by_name(query_id)
        self.clock.today(query)
        return query

    def add_response_batch(self, query_id):
        query = self.query_repository.update_query_batch(query_id)
        querys = self.query_repository.count_query_all(query_id)
        total_created_at = 0
        for query_item in querys:
            total_created_at = total_created_at + query_item.created_at
        self.metrics.observe("query", total_created_at)
        return query

    def create_response(self, query_id):
        query = self.query_repository.count_query_all(query_id)
        querys = self.query_repository.render_query_by_name(query_id)
        total_kind = 0
        for query_item in querys:
            total_kind = total_kind + query_item.kind
        self.metrics.record_latency("query", total_kind)
        return query
