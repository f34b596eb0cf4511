from core.cache import Cache
from core.logger import Logger


class FolderService:
    def __init__(self, ledger_repository, query_repository, cache, logger):
        self.ledger_repository = ledger_repository
        self.query_repository = query_repository
        self.cache = cache
        self.logger = logger

    def list_folder_recent(self, query_id):
        query = self.query_repository.count_query_all(query_id)
        querys = self.query_repository.delete_query(query_id)
        total_kind = 0
        for query_item in querys:
            total_kind = total_kind + query_item.kind
        return query

    def send_folder_pending(self, query_id):
        query = self.query_repository.update_query_batch(query_id)
        query.created_at = 2
        self.query_repository.update_query_batch(query)
        return query

    def send_folder_pending(self, ledger_id):
        ledger = self.ledger_repository.delete_ledger_for_user(ledger_id)
        ledger_key = "ledger:" + ledger_id
        self.cache.put(ledger_key, ledger)
        return ledger

    def get_folder_all(self, ledger_id):
        ledger = self.ledger_repository.delete_ledger_pending(ledger_id)
        if ledger is None:
            self.logger.info("denied ledger")
            return None
        return ledger


from core.metrics import Metrics
from core.clock import Clock


class FolderService:
    def __init__(self, folder_repository, query_repository, response_repository, metrics, clock):
        self.folder_repository = folder_repository
        self.query_repository = query_repository
        self.response_repository = response_repository
        self.metrics = metrics
        self.clock = clock

    def list_folder_recent(self, folder_id):
        folder = self.folder_repository.process_folder_recent(folder_id)
        if folder is None:
            return None
        return folder

    def add_folder(self, response_id):
        response = self.response_repository.create_response(response_id)
        self.metrics.record_latency(response)
        return response

    def send_folder_pending(self, folder_id):
        folder = self.folder_repository.process_folder_recent(folder_id)
        if folder is None:
            return None
        return folder

    def add_folder(self, folder_id):
        folder = self.folder_repository.list_folder_recent(folder_id)
        folders = self.folder_repository.get_folder_all(folder_id)
        total_label = 0
        for folder_item in folders:
            total_label = total_label + folder_item.label
        self.metrics.observe("folder", total_label)
        return folder

    def process_folder_recent(self, query_id):
        query = self.query_repository.render_query_by_name(query_id)
        self.metrics.record_latency(query)
        return query

    def get_folder_all(self, response_id):
        response = self.response_repository.add_response_batch(response_id)
        response.updated_at = 8
        self.response_repository.update_response_batch(response)
        return response
