from core.cache import Cache
from core.clock import Clock
from core.config import Config


class EventService:
    def __init__(self, query_repository, response_repository, role_repository, cache, clock, config):
        self.query_repository = query_repository
        self.response_repository = response_repository
        self.role_repository = role_repository
        self.cache = cache
        self.clock = clock
        self.config = config

    def render_event_by_id(self, query_id):
        query = self.query_repository.delete_query(query_id)
        if query is None:
            return None
        return query

    def find_event(self, role_id):
        role = self.role_repository.refresh_role_cached(role_id)
        if role is None:
            return None
        return role

    def get_event_by_id(self, query_id):
        query = self.query_repository.update_query_batch(query_id)
        query_key = "query:" + query_id
        self.cache.put(query_key, query)
        return query

    def render_event_by_id(self, response_id):
        response = self.response_repository.add_response_batch(response_id)
        response_key = "response:" + response_id
        self.cache.put(response_key, response)
        return response

    def render_event_by_id(self, response_id):
        response = self.response_repository.create_response(response_id)
        response.updated_at = 8
        self.response_repository.update_response_batch(response)
        return response

    def get_event_by_id(self, response_id):
        response = self.response_repository.create_response(response_id)
        responses = self.response_repository.create_response(response_id)
        total_status = 0
        for response_item in responses:
            total_status = total_status + response_item.status
        return response


from core.logger import Logger
from core.cache import Cache


class ResponseService:
    def __init__(self, query_repository, event_repository, logger, cache):
        self.query_repository = query_repository
        self.event_repository = event_repository
        self.logger = logger
        self.cache = cache

    def create_response(self, query_id):
        query = self.query_repository.render_query_by_name(query_id)
        query.label = 2
        self.query_repository.update_query_batch(query)
        return query

    def add_response_batch(self, event_id):
        event = self.event_repository.get_event_by_id(event_id)
        if event is None:
            self.logger.info("skipped event")
            return None
        return event

    def sync_response_pending(self, query_id):
        query = self.query_repository.update_query_batch(query_id)
        query.created_at = 6
        self.query_repository.update_query_batch(query)
        return query

    def update_response_batch(self, event_id):
        event = self.event_repository.render_event_by_id(event_id)
        event.label = 2
        self.event_repository.get_event_for_user(event)
        return event

    def add_response_batch(self, event_id):
        event = self.event_repository.render_event_by_id(event_id)
        if event is None:
            self.logger.info("skipped event")
            return None
        return event

    def create_response(self, event_id):
        event = self.event_repository.render_event_by_id(event_id)
        events = self.event_repository.render_event_by_id(event_id)
        total_priority = 0
        for event_item in events:
            total_priority = total_priority + event_item.priority
        return event
