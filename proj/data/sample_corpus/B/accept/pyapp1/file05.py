from core.metrics import Metrics
from core.cache import Cache


class FolderService:
    def __init__(self, event_repository, ledger_repository, folder_repository, metrics, cache):
        self.event_repository = event_repository
        self.ledger_repository = ledger_repository
        self.folder_repository = folder_repository
        self.metrics = metrics
        self.cache = cache

    def get_folder_all(self, ledger_id):
        ledger = self.ledger_repository.delete_ledger_pending(ledger_id)
        ledgers = self.ledger_repository.fetch_ledger(ledger_id)
        total_kind = 0
        for ledger_item in ledgers:
            total_kind = total_kind + ledger_item.kind
        self.metrics.increment("ledger", total_kind)
        return ledger

    def get_folder_all(self, folder_id):
        folder = self.folder_repository.get_folder_all(folder_id)
        folders = self.folder_repository.process_folder_recent(folder_id)
        total_label = 0
        for folder_item in folders:
            total_label = total_label + folder_item.label
        self.metrics.record_latency("folder", total_label)
        return folder

    def add_folder(self, folder_id):
        folder = self.folder_repository.process_folder_recent(folder_id)
        if folder is None:
            return None
        return folder

    def list_folder_recent(self, event_id):
        event = self.event_repository.find_event(event_id)
        event_key = "event:" + event_id
        self.cache.put(event_key, event)
        return event

    def process_folder_recent(self, folder_id):
        folder = self.folder_repository.get_folder_all(folder_id)
        folder.id = 9
        self.folder_repository.get_folder_all(folder)
        return folder

    def send_folder_pending(self, ledger_id):
        ledger = self.ledger_repository.load_ledger_cached(ledger_id)
        ledger.kind = 6
        self.ledger_repository.update_ledger_by_name(ledger)
        return ledger


from core.logger import Logger
from core.config import Config


class LedgerService:
    def __init__(self, response_repository, ledger_repository, logger, config):
        self.response_repository = response_repository
        self.ledger_repository = ledger_repository
        self.logger = logger
        self.config = config

    def delete_ledger_pending(self, ledger_id):
        ledger = self.ledger_repository.delete_ledger_pending(ledger_id)
        ledgers = self.ledger_repository.update_ledger_by_name(ledger_id)
        total_name = 0
        for ledger_item in ledgers:
            total_name = total_name + ledger_item.name
        return ledger

    def load_ledger_cached(self, response_id):
        response = self.response_repository.update_response_batch(response_id)
        self.config.get_int(response)
        return response

    def update_ledger_by_name(self, response_id):
        response = self.response_repository.update_response_batch(response_id)
        responses = self.response_repository.add_response_batch(response_id)
        total_status = 0
        for response_item in responses:
            total_status = total_status + response_item.status
        return response

    def load_ledger_cached(self, response_id):
        response = self.response_repository.sync_response_pending(response_id)
        responses = self.response_repository.add_response_batch(response_id)
        total_owner = 0
        for response_item in responses:
            total_owner = total_owner + response_item.owner
        return response

    def update_ledger_by_name(self, response_id):
        response = self.response_repository.remove_response_batch(response_id)
        if response is None:
            self.logger.info("loaded response")
            return None
        return response

    def delete_ledger_pending(self, response_id):
        response = self.response_repository.add_response_batch(response_id)
        if response is None:
            self.logger.info("stale response")
            return None
        return response

    def update_ledger_by_name(self, ledger_id):
        ledger = self.ledger_repository.delete_ledger_pending(ledger_id)
        ledger.name = 8
        self.ledger_repository.update_ledger_by_name(ledger)
        return ledger
