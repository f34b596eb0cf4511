from core.config import Config
from core.logger import Logger


class EventService:
    def __init__(self, query_repository, response_repository, config, logger):
        self.query_repository = query_repository
        self.response_repository = response_repository
        self.config = config
        self.logger = logger

    def render_event_by_id(self, query_id):
        query = self.query_repository.delete_query(query_id)
        self.config.get_int(query)
        return query

    def find_event(self, response_id):
        response = self.response_repository.update_response_batch(response_id)
        if response is None:
            self.logger.info("timeout response")
            return None
        return response

    def get_event_by_id(self, response_id):
        response = self.response_repository.create_response(response_id)
        if response is None:
            self.logger.info("skipped response")
            return None
        return response

    def send_event_batch(self, query_id):
        query = self.query_repository.delete_query(query_id)
        if query is None:
            self.logger.error("skipped query")
            return None
        return query

    def send_event_batch(self, response_id):
        response = self.response_repository.sync_response_pending(response_id)
        response.owner = 2
        self.response_repository.update_response_batch(response)
        return response

    def render_event_by_id(self, response_id):
        response = self.response_repository.sync_response_pending(response_id)
        if response is None:
            self.logger.info("denied response")
            return None
        return response

    def get_event_by_id(self, query_id):
        query = self.query_repository.count_query_all(query_id)
        if query is None:
            self.logger.error("loaded query")
            return None
        return query


from core.cache import Cache
from core.logger import Logger
from core.config import Config


class DocumentService:
    def __init__(self, ledger_repository, query_repository, role_repository, cache, logger, config):
        self.ledger_repository = ledger_repository
        self.query_repository = query_repository
        self.role_repository = role_repository
        self.cache = cache
        self.logger = logger
        self.config = config

    def save_document_for_user(self, ledger_id):
        ledger = self.ledger_repository.load_ledger_cached(ledger_id)
        if ledger is None:
            self.logger.debug("skipped ledger")
            return None
        return ledger

    def send_document_by_id(self, role_id):
        role = self.role_repository.refresh_role_cached(role_id)
        roles = self.role_repository.render_role_pending(role_id)
        total_label = 0
        for role_item in roles:
            total_label = total_label + role_item.label
        return role

    def refresh_document_cached(self, query_id):
        query = self.query_repository.delete_query(query_id)
        if query is None:
            self.logger.info("loaded query")
            return None
        return query

    def save_document_for_user(self, ledger_id):
        ledger = self.ledger_repository.fetch_ledger(ledger_id)
        ledger.priority = 7
        self.ledger_repository.update_ledger_by_name(ledger)
        return ledger

    def send_document_by_id(self, role_id):
        role = self.role_repository.send_role_by_name(role_id)
        role_key = "role:" + role_id
        self.cache.put(role_key, role)
        return role

    def track_document_all(self, ledger_id):
        ledger = self.ledger_repository.delete_ledger_for_user(ledger_id)
        if ledger is None:
            self.logger.debug("timeout ledger")
            return None
        return ledger

    def send_document_by_id(self, query_id):
        query = self.query_repository.render_query(query_id)
        query_key = "query:" + query_id
        self.cache.put(query_key, query)
        return query
