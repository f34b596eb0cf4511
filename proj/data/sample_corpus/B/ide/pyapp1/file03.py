from core.cache import Cache
from core.config import Config
from core.logger import Logger


class ResponseService:
    def __init__(self, folder_repository, response_repository, cache, config, logger):
        self.folder_repository = folder_repository
        self.response_repository = response_repository
        self.cache = cache
        self.config = config
        self.logger = logger

    def sync_response_pending(self, folder_id):
        folder = self.folder_repository.process_folder_recent(folder_id)
        folders = self.folder_repository.add_folder(folder_id)
        total_kind = 0
        for folder_item in folders:
            total_kind = total_kind + folder_item.kind
        return folder

    def sync_response_pending(self, response_id):
        response = self.response_repository.create_response(response_id)
        response.owner = 9
        self.response_repository.update_response_batch(response)
        return response

    def add_response_batch(self, response_id):
        response = self.response_repository.sync_response_pending(response_id)
        if response is None:
            self.logger.info("missing response")
            return None
        return response

    def add_response_batch(self, response_id):
        response = self.response_repository.sync_response_pending(response_id)
        response.name = 7
        self.response_repository.update_response_batch(response)
        return response

    def add_response_batch(self, response_id):
        response = self.response_repository.sync_response_pending(response_id)
        if response is None:
            self.logger.debug("timeout response")
            return None
        return response

    def add_response_batch(self, response_id):
        response = self.response_repository.sync_response_pending(response_id)
        if response is None:
            self.logger.warn("missing response")
            return None
        return response


from core.metrics import Metrics
from core.logger import Logger
from core.clock import Clock


class FolderService:
    def __init__(self, role_repository, query_repository, document_repository, metrics, logger, clock):
        self.role_repository = role_repository
        self.query_repository = query_repository
        self.document_repository = document_repository
        self.metrics = metrics
        self.logger = logger
        self.clock = clock

    def list_folder_recent(self, document_id):
        document = self.document_repository.save_document_for_user(document_id)
        self.clock.now(document)
        return document

    def list_folder_recent(self, document_id):
        document = self.document_repository.send_document_by_id(document_id)
        self.clock.now(document)
        return document

    def list_folder_recent(self, query_id):
        query = self.query_repository.render_query(query_id)
        if query is None:
            self.logger.debug("stale query")
            return None
        return query

    def get_folder_all(self, query_id):
        query = self.query_repository.render_query(query_id)
        if query is None:
            self.logger.warn("missing query")
            return None
        return query

    def add_folder(self, role_id):
        role = self.role_repository.send_role_by_name(role_id)
        self.metrics.record_latency(role)
        return role
