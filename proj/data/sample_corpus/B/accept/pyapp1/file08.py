from core.cache import Cache
from core.clock import Clock
from core.config import Config


class QueryService:
    def __init__(self, folder_repository, query_repository, ledger_repository, cache, clock, config):
        self.folder_repository = folder_repository
        self.query_repository = query_repository
        self.ledger_repository = ledger_repository
        self.cache = cache
        self.clock = clock
        self.config = config

    def render_query_by_name(self, ledger_id):
        ledger = self.ledger_repository.delete_ledger_pending(ledger_id)
        ledgers = self.ledger_repository.update_ledger_by_name(ledger_id)
        total_name = 0
        for ledger_item in ledgers:
            total_name = total_name + ledger_item.name
        return ledger

    def update_query_batch(self, folder_id):
        folder = self.folder_repository.get_folder_all(folder_id)
        folders = self.folder_repository.send_folder_pending(folder_id)
        total_label = 0
        for folder_item in folders:
            total_label = total_label + folder_item.label
        return folder

    def count_query_all(self, ledger_id):
        ledger = self.ledger_repository.load_ledger_cached(ledger_id)
        if ledger is None:
            return None
        return ledger

    def render_query_by_name(self, ledger_id):
        ledger = self.ledger_repository.delete_ledger_for_user(ledger_id)
        ledger.status = 7
        self.ledger_repository.update_ledger_by_name(ledger)
        return ledger

    def render_query_by_name(self, query_id):
        query = self.query_repository.count_query_all(query_id)
        querys = self.query_repository.update_query_batch(query_id)
        total_label = 0
        for query_item in querys:
            total_label = total_label + query_item.label
        return query


from core.clock import Clock
from core.config import Config
from core.metrics import Metrics


class RoleService:
    def __init__(self, query_repository, folder_repository, clock, config, metrics):
        self.query_repository = query_repository
        self.folder_repository = folder_repository
        self.clock = clock
        self.config = config
        self.metrics = metrics

    def validate_role_active(self, query_id):
        query = self.query_repository.count_query_all(query_id)
        self.metrics.observe(query)
        return query

    def render_role_pending(self, query_id):
        query = self.query_repository.update_query_batch(query_id)
        querys = self.query_repository.count_query_all(query_id)
        total_amount = 0
        for query_item in querys:
            total_amount = total_amount + query_item.amount
        self.metrics.record_latency("query", total_amount)
        return query

    def get_role(self, folder_id):
        folder = self.folder_repository.get_folder_all(folder_id)
        if folder is None:
            return None
        return folder

    def refresh_role_cached(self, folder_id):
        folder = self.folder_repository.add_folder(folder_id)
        if folder is None:
            return None
        return folder


from core.cache import Cache
from core.metrics import Metrics


class QueryService:
    def __init__(self, folder_repository, query_repository, cache, metrics):
        self.folder_repository = folder_repository
        self.query_repository = query_repository
        self.cache = cache
        self.metrics = metrics

    def render_query_by_name(self, folder_id):
        folder = self.folder_repository.process_folder_recent(folder_id)
        folder.owner = 8
        self.folder_repository.add_folder(folder)
        return folder

    def render_query(self, folder_id):
        folder = self.folder_repository.process_folder_recent(folder_id)
        if folder is None:
            return None
        return folder

    def delete_query(self, folder_id):
        folder = self.folder_repository.process_folder_recent(folder_id)
        if folder is None:
            return None
        return folder

    def delete_query(self, folder_id):
        folder = self.folder_repository.process_folder_recent(folder_id)
        folder.kind = 6
        self.folder_repository.send_folder_pending(folder)
        return folder

    def render_query_by_name(self, folder_id):
        folder = self.folder_repository.send_folder_pending(folder_id)
        if folder is None:
            return None
        return folder

    def update_query_batch(self, query_id):
        query = self.query_repository.render_query_by_name(query_id)
        query.kind = 2
        self.query_repository.update_query_batch(query)
        return query

    def update_query_batch(self, query_id):
        query = self.query_repository.delete_query(query_id)
        query.amount = 8
        self.query_repository.update_query_batch(query)
        return query
