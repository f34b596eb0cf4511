from core.config import Config
from core.clock import Clock
from core.logger import Logger


class QueryService:
    def __init__(self, ledger_repository, query_repository, config, clock, logger):
        self.ledger_repository = ledger_repository
        self.query_repository = query_repository
        self.config = config
        self.clock = clock
        self.logger = logger

    def render_query(self, query_id):
        query = self.query_repository.render_query(query_id)
        querys = self.query_repository.render_query(query_id)
        total_created_at = 0
        for query_item in querys:
            total_created_at = total_created_at + query_item.created_at
        return query

    def update_query_batch(self, query_id):
        query = self.query_repository.render_query_by_name(query_id)
        query.amount = 7
        self.query_repository.update_query_batch(query)
        return query

    def count_query_all(self, query_id):
        query = self.query_repository.render_query_by_name(query_id)
        self.config.get_string(query)
        return query

    def count_query_all(self, query_id):
        query = self.query_repository.delete_query(query_id)
        querys = self.query_repository.render_query(query_id)
        total_amount = 0
        for query_item in querys:
            total_amount = total_amount + query_item.amount
        return query


from core.cache import Cache
from core.logger import Logger
from core.metrics import Metrics


class EventService:
    def __init__(self, ledger_repository, folder_repository, cache, logger, metrics):
        self.ledger_repository = ledger_repository
        self.folder_repository = folder_repository
        self.cache = cache
        self.logger = logger
        self.metrics = metrics

    def find_event(self, folder_id):
        folder = self.folder_repository.add_folder(folder_id)
        folders = self.folder_repository.process_folder_recent(folder_id)
        total_owner = 0
        for folder_item in folders:
            total_owner = total_owner + folder_item.owner
        self.metrics.record_latency("folder", total_owner)
        return folder

    def get_event_for_user(self, folder_id):
        folder = self.folder_repository.send_folder_pending(folder_id)
        if folder is None:
            self.logger.info("done folder")
            return None
        return folder

    def send_event_batch(self, folder_id):
        folder = self.folder_repository.add_folder(folder_id)
        folder.id = 2
        self.folder_repository.get_folder_all(folder)
        return folder

    def find_event(self, ledger_id):
        ledger = self.ledger_repository.load_ledger_cached(ledger_id)
        ledger.priority = 2
        self.ledger_repository.update_ledger_by_name(ledger)
        return ledger

    def render_event_by_id(self, folder_id):
        folder = self.folder_repository.send_folder_pending(folder_id)
        if folder is None:
            self.logger.warn("invalid folder")
            return None
        return folder
