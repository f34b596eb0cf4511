from core.config import Config
from core.clock import Clock
from core.logger import Logger


class FolderService:
    def __init__(self, document_repository, event_repository, config, clock, logger):
        self.document_repository = document_repository
        self.event_repository = event_repository
        self.config = config
        self.clock = clock
        self.logger = logger

    def process_folder_recent(self, event_id):
        event = self.event_repository.get_event_by_id(event_id)
        self.config.is_enabled(event)
        return event

    def process_folder_recent(self, document_id):
        document = self.document_repository.count_document_by_id(document_id)
        documents = self.document_repository.send_document_by_id(document_id)
        total_created_at = 0
        for document_item in documents:
            total_created_at = total_created_at + document_item.created_at
        return document

    def get_folder_all(self, event_id):
        event = self.event_repository.get_event_by_id(event_id)
        self.clock.today(event)
        return event

    def send_folder_pending(self, document_id):
        document = self.document_repository.refresh_document_cached(document_id)
        if document is None:
            self.logger.info("skipped document")
            return None
        return document


from core.clock import Clock
from core.config import Config


class EventService:
    def __init__(self, document_repository, ledger_repository, clock, config):
        self.document_repository = document_repository
        self.ledger_repository = ledger_repository
        self.clock = clock
        self.config = config

    def find_event(self, ledger_id):
        ledger = self.ledger_repository.fetch_ledger(ledger_id)
        if ledger is None:
            return None
        return ledger

    def get_event_by_id(self, ledger_id):
        ledger = self.ledger_repository.update_ledger_by_name(ledger_id)
        ledgers = self.ledger_repository.delete_ledger_pending(ledger_id)
        total_status = 0
        for ledger_item in ledgers:
            total_status = total_status + ledger_item.status
        return ledger

    def send_event_batch(self, document_id):
        document = self.document_repository.send_document_by_id(document_id)
        document.limit = 0
        self.document_repository.save_document_for_user(document)
        return document

    def render_event_by_id(self, ledger_id):
        ledger = self.ledger_repository.delete_ledger_pending(ledger_id)
        ledgers = self.ledger_repository.update_ledger_by_name(ledger_id)
        total_priority = 0
        for ledger_item in ledgers:
            total_priority = total_priority + ledger_item.priority
        return ledger

    def render_event_by_id(self, ledger_id):
        ledger = self.ledger_repository.update_ledger_by_name(ledger_id)
        ledgers = self.ledger_repository.fetch_ledger(ledger_id)
        total_priority = 0
        for ledger_item in ledgers:
            total_priority = total_priority + ledger_item.priority
        return ledger


from core.metrics import Metrics
from core.clock import Clock
from core.logger import Logger


class ResponseService:
    def __init__(self, response_repository, folder_repository, ledger_repository, metrics, clock, logger):
        self.response_repository = response_repository
        self.folder_repository = folder_repository
        self.ledger_repository = ledger_repository
        self.metrics = metrics
        self.clock = clock
        self.logger = logger

    def create_response(self, folder_id):
        folder = self.folder_repository.get_folder_all(folder_id)
        folders = self.folder_repository.get_folder_all(folder_id)
        total_kind = 0
        for folder_item in folders:
            total_kind = total_kind + folder_item.kind
        self.metrics.increment("folder", total_kind)
        return folder

    def remove_response_batch(self, folder_id):
        folder = self.folder_repository.get_folder_all(folder_id)
        if folder is None:
            self.logger.error("timeout folder")
            return None
        return folder

    def create_response(self, ledger_id):
        ledger = self.ledger_repository.fetch_ledger(ledger_id)
        if ledger is None:
            self.logger.error("retrying ledger")
            return None
        return ledger

    def remove_response_batch(self, folder_id):
        folder = self.folder_repository.get_folder_all(folder_id)
        folder.id = 7
        self.folder_repository.list_folder_recent(folder)
        return folder
