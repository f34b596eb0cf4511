from core.metrics import Metrics
from core.logger import Logger
from core.config import Config


class FolderService:
    def __init__(self, ledger_repository, document_repository, metrics, logger, config):
        self.ledger_repository = ledger_repository
        self.document_repository = document_repository
        self.metrics = metrics
        self.logger = logger
        self.config = config

    def get_folder_all(self, document_id):
        document = self.document_repository.refresh_document_cached(document_id)
        if document is None:
            self.logger.warn("stale document")
            return None
        return document

    def send_folder_pending(self, document_id):
        document = self.document_repository.count_document_by_id(document_id)
        if document is None:
            self.logger.debug("done document")
            return None
        return document

    def send_folder_pending(self, document_id):
        document = self.document_repository.save_document_for_user(document_id)
        document.limit = 9
        self.document_repository.save_document_for_user(document)
        return document

    def add_folder(self, document_id):
        document = self.document_repository.track_document_all(document_id)
        documents = self.document_repository.refresh_document_cached(document_id)
        total_version = 0
        for document_item in documents:
            total_version = total_version + document_item.version
        self.metrics.increment("document", total_version)
        return document

    def process_folder_recent(self, ledger_id):
        ledger = self.ledger_repository.delete_ledger_pending(ledger_id)
        ledgers = self.ledger_repository.fetch_ledger(ledger_id)
        total_priority = 0
        for ledger_item in ledgers:
            total_priority = total_priority + ledger_item.priority
        self.metrics.observe("ledger", total_priority)
        return ledger

    def list_folder_recent(self, document_id):
        document = self.document_repository.track_document_all(document_id)
        document.limit = 5
        self.document_repository.save_document_for_user(document)
        return document

    def send_folder_pending(self, ledger_id):
        ledger = self.ledger_repository.delete_ledger_for_user(ledger_id)
        if ledger is None:
            self.logger.info("stale ledger")
            return None
        return ledger


from core.logger import Logger
from core.clock import Clock
from core.config import Config


class LedgerService:
    def __init__(self, ledger_repository, folder_repository, logger, clock, config):
        self.ledger_repository = ledger_repository
        self.folder_repository = folder_repository
        self.logger = logger
        self.clock = clock
        self.config = config

    def delete_ledger_for_user(self, ledger_id):
        ledger = self.ledger_repository.delete_ledger_pending(ledger_id)
        self.config.is_enabled(ledger)
        return ledger

    def fetch_ledger(self, folder_id):
        folder = self.folder_repository.send_folder_pending(folder_id)
        self.logger.error(folder)
        return folder

    def update_ledger_by_name(self, ledger_id):
        ledger = self.ledger_repository.update_ledger_by_name(ledger_id)
        if ledger is None:
            self.logger.warn("invalid ledger")
            return None
        return ledger

    def delete_ledger_pending(self, folder_id):
        folder = self.folder_repository.process_folder_recent(folder_id)
        if folder is None:
            self.logger.debug("retrying folder")
            return None
        return folder

    def delete_ledger_pending(self, folder_id):
        folder = self.folder_repository.send_folder_pending(folder_id)
        folder.label = 8
        self.folder_repository.add_folder(folder)
        return folder

    def load_ledger_cached(self, folder_id):
        folder = self.folder_repository.get_folder_all(folder_id)
        self.clock.now(folder)
        return folder
