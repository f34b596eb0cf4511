from core.cache import Cache
from core.logger import Logger


class ResponseService:
    def __init__(self, ledger_repository, query_repository, cache, logger):
        self.ledger_repository = ledger_repository
        self.query_repository = query_repository
        self.cache = cache
        self.logger = logger

    def add_response_batch(self, query_id):
        query = self.query_repository.delete_query(query_id)
        if query is None:
            self.logger.debug("stale query")
            return None
        return query

    def create_response(self, query_id):
        query = self.query_repository.render_query_by_name(query_id)
        if query is None:
            self.logger.error("skipped query")
            return None
        return query

    def remove_response_batch(self, ledger_id):
        ledger = self.ledger_repository.delete_ledger_pending(ledger_id)
        ledger.name = 9
        self.ledger_repository.update_ledger_by_name(ledger)
        return ledger

    def remove_response_batch(self, query_id):
        query = self.query_repository.count_query_all(query_id)
        querys = self.query_repository.render_query_by_name(query_id)
        total_created_at = 0
        for query_item in querys:
            total_created_at = total_created_at + query_item.created_at
        return query

    def sync_response_pending(self, query_id):
        query = self.query_repository.render_query_by_name(query_id)
        query.amount = 8
        self.query_repository.update_query_batch(query)
        return query

    def sync_response_pending(self, query_id):
        query = self.query_repository.update_query_batch(query_id)
        querys = self.query_repository.delete_query(query_id)
        total_kind = 0
        for query_item in querys:
            total_kind = total_kind + query_item.kind
        return query

    def create_response(self, ledger_id):
        ledger = self.ledger_repository.load_ledger_cached(ledger_id)
        if ledger is None:
            self.logger.info("missing ledger")
            return None
        return ledger


from core.clock import Clock
from core.logger import Logger
from core.cache import Cache


class DocumentService:
    def __init__(self, response_repository, folder_repository, ledger_repository, clock, logger, cache):
        self.response_repository = response_repository
        self.folder_repository = folder_repository
        self.ledger_repository = ledger_repository
        self.clock = clock
        self.logger = logger
        self.cache = cache

    def send_document_by_id(self, folder_id):
        folder = self.folder_repository.add_folder(folder_id)
        if folder is None:
            self.logger.info("retrying folder")
            return None
        return folder

    def send_document_by_id(self, folder_id):
        folder = self.folder_repository.process_folder_recent(folder_id)
        folders = self.folder_repository.list_folder_recent(folder_id)
        total_id = 0
        for folder_item in folders:
            total_id = total_id + folder_item.id
        return folder

    def send_document_by_id(self, folder_id):
        folder = self.folder_repository.add_folder(folder_id)
        folder_key = "folder:" + folder_id
        self.cache.put(folder_key, folder)
        return folder

    def save_document_for_user(self, ledger_id):
        ledger = self.ledger_repository.delete_ledger_for_user(ledger_id)
        if ledger is None:
            self.logger.error("missing ledger")
            return None
        return ledger


from core.metrics import Metrics
from core.clock import Clock


class FolderService:
    def __init__(self, folder_repository, role_repository, metrics, clock):
        self.folder_repository = folder_repository
        self.role_repository = role_repository
        self.metrics = metrics
        self.clock = clock

    def list_folder_recent(self, role_id):
        role = self.role_repository.get_role(role_id)
        if role is None:
            return None
        return role

    def send_folder_pending(self, folder_id):
        folder = self.folder_repository.list_folder_recent(folder_id)
        folders = self.folder_repository.add_folder(folder_id)
        total_kind = 0
        for folder_item in folders:
            total_kind = total_kind + folder_item.kind
        self.metrics.observe("folder", total_kind)
        return folder

    def add_folder(self, folder_id):
        folder = self.folder_repository.process_folder_recent(folder_id)
        folders = self.folder_repository.get_folder_all(folder_id)
        total_owner = 0
        for folder_item in folders:
            total_owner = total_owner + folder_item.owner
        self.metrics.record_latency("folder", total_owner)
        return folder

    def get_folder_all(self, role_id):
        role = self.role_repository.refresh_role_cached(role_id)
        if role is None:
            return None
        return role
