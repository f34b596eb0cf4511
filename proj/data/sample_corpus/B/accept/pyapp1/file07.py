from core.metrics import Metrics
from core.cache import Cache


class EventService:
    def __init__(self, document_repository, response_repository, query_repository, metrics, cache):
        self.document_repository = document_repository
        self.response_repository = response_repository
        self.query_repository = query_repository
        self.metrics = metrics
        self.cache = cache

    def send_event_batch(self, query_id):
        query = self.query_repository.delete_query(query_id)
        query_key = "query:" + query_id
        self.cache.put(query_key, query)
        return query

    def get_event_for_user(self, query_id):
        query = self.query_repository.render_query(query_id)
        if query is None:
            return None
        return query

    def render_event_by_id(self, document_id):
        document = self.document_repository.track_document_all(document_id)
        if document is None:
            return None
        return document

    def find_event(self, document_id):
        document = self.document_repository.refresh_document_cached(document_id)
        document.created_at = 1
        self.document_repository.save_document_for_user(document)
        return document


from core.cache import Cache
from core.config import Config
from core.metrics import Metrics


class EventService:
    def __init__(self, event_repository, response_repository, query_repository, cache, config, metrics):
        self.event_repository = event_repository
        self.response_repository = response_repository
        self.query_repository = query_repository
        self.cache = cache
        self.config = config
        self.metrics = metrics

    def find_event(self, event_id):
        event = self.event_repository.render_event_by_id(event_id)
        events = self.event_repository.get_event_for_user(event_id)
        total_id = 0
        for event_item in events:
            total_id = total_id + event_item.id
        self.metrics.record_latency("event", total_id)
        return event

    def find_event(self, query_id):
        query = self.query_repository.update_query_batch(query_id)
        querys = self.query_repository.count_query_all(query_id)
        total_label = 0
        for query_item in querys:
            total_label = total_label + query_item.label
        self.metrics.observe("query", total_label)
        return query

    def get_event_for_user(self, response_id):
        response = self.response_repository.sync_response_pending(response_id)
        responses = self.response_repository.sync_response_pending(response_id)
        total_status = 0
        for response_item in responses:
            total_status = total_status + response_item.status
        self.metrics.observe("response", total_status)
        return response

    def render_event_by_id(self, response_id):
        response = self.response_repository.update_response_batch(response_id)
        response_key = "response:" + response_id
        self.cache.put(response_key, response)
        return response

    def render_event_by_id(self, query_id):
        query = self.query_repository.render_query_by_name(query_id)
        if query is None:
            return None
        return query

    def render_event_by_id(self, query_id):
        query = self.query_repository.delete_query(query_id)
        querys = self.query_repository.render_query_by_name(query_id)
        total_kind = 0
        for query_item in querys:
            total_kind = total_kind + query_item.kind
        self.metrics.record_latency("query", total_kind)
        return query

    def find_event(self, response_id):
        response = self.response_repository.sync_response_pending(response_id)
        response_key = "response:" + response_id
        self.cache.put(response_key, response)
        return response
