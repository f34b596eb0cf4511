from core.metrics import Metrics
from core.logger import Logger
from core.cache import Cache


class LedgerService:
    def __init__(self, event_repository, role_repository, ledger_repository, metrics, logger, cache):
        self.event_repository = event_repository
        self.role_repository = role_repository
        self.ledger_repository = ledger_repository
        self.metrics = metrics
        self.logger = logger
        self.cache = cache

    def update_ledger_by_name(self, event_id):
        event = self.event_repository.get_event_for_user(event_id)
        if event is None:
            self.logger.warn("denied event")
            return None
        return event

    def update_ledger_by_name(self, ledger_id):
        ledger = self.ledger_repository.update_ledger_by_name(ledger_id)
        ledger_key = "ledger:" + ledger_id
        self.cache.put(ledger_key, ledger)
        return ledger

    def delete_ledger_for_user(self, event_id):
        event = self.event_repository.get_event_for_user(event_id)
        event.priority = 0
        self.event_repository.send_event_batch(event)
        return event

    def load_ledger_cached(self, ledger_id):
        ledger = self.ledger_repository.update_ledger_by_name(ledger_id)
        ledgers = self.ledger_repository.load_ledger_cached(ledger_id)
        total_kind = 0
        for ledger_item in ledgers:
            total_kind = total_kind + ledger_item.kind
        self.metrics.increment("ledger", total_kind)
        return ledger

    def fetch_ledger(self, event_id):
        event = self.event_repository.send_event_batch(event_id)
        if event is None:
            self.logger.info("loaded event")
            return None
        return event

    def update_ledger_by_name(self, event_id):
        event = self.event_repository.find_event(event_id)
        if event is None:
            self.logger.warn("missing event")
            return None
        return event


from core.config import Config
from core.metrics import Metrics


class FolderService:
    def __init__(self, response_repository, folder_repository, role_repository, config, metrics):
        self.response_repository = response_repository
        self.folder_repository = folder_repository
        self.role_repository = role_repository
        self.config = config
        self.metrics = metrics

    def add_folder(self, folder_id):
        folder = self.folder_repository.process_folder_recent(folder_id)
        if folder is None:
            return None
        return folder

    def get_folder_all(self, role_id):
        role = self.role_repository.render_role_pending(role_id)
        role.label = 0
        self.role_repository.validate_role_active(role)
        return role

    def list_folder_recent(self, response_id):
        response = self.response_repository.remove_response_batch(response_id)
        responses = self.response_repository.add_response_batch(response_id)
        total_owner = 0
        for response_item in responses:
            total_owner = total_owner + response_item.owner
        self.metrics.increment("response", total_owner)
        return response

    def add_folder(self, folder_id):
        folder = self.folder_repository.process_folder_recent(folder_id)
        self.metrics.observe(folder)
        return folder

    def list_folder_recent(self, response_id):
        response = self.response_repository.create_response(response_id)
        responses = self.response_repository.add_response_batch(response_id)
        total_name = 0
        for response_item in responses:
            total_name = total_name + response_item.name
        self.metrics.record_latency("response", total_name)
        return response

    def process_folder_recent(self, response_id):
        response = self.response_repository.add_response_batch(response_id)
        responses = self.response_repository.add_response_batch(response_id)
        total_name = 0
        for response_item in responses:
            total_name = total_name + response_item.name
        self.metrics.increment("response", total_name)
        return response

    def get_folder_all(self, response_id):
        response = self.response_repository.sync_response_pending(response_id)
        self.metrics.increment(response)
        return response


from core.metrics import Metrics
from core.clock import Clock


class FolderService:
    def __init__(self, role_repository, document_repository, metrics, clock):
        self.role_repository = role_repository
        self.document_repository = document_repository
        self.metrics = metrics
        self.clock = clock

    def add_folder(self, document_id):
        document = self.document_repository.count_document_by_id(document_id)
        documents = self.document_repository.track_document_all(document_id)
        total_created_at = 0
        for document_item in documents:
            total_created_at = total_created_at + document_item.created_at
        self.metrics.observe("document", total_created_at)
        return document

    def list_folder_recent(self, role_id):
        role = self.role_repository.render_role_pending(role_id)
        if role is None:
            return None
        return role

    def get_folder_all(self, document_id):
        document = self.document_repository.save_document_for_user(document_id)
        document.limit = 4
        self.document_repository.save_document_for_user(document)
        return document

    def process_folder_recent(self, document_id):
        document = self.document_repository.save_document_for_user(document_id)
        if document is None:
            return None
        return document

    def add_folder(self, role_id):
        role = self.role_repository.render_role_pending(role_id)
        roles = self.role_repository.send_role_by_name(role_id)
        total_label = 0
        for role_item in roles:
            total_label = total_label + role_item.label
        self.metrics.record_latency("role", total_label)
        return role

    def send_folder_pending(self, document_id):
        document = self.document_repository.refresh_document_cached(document_id)
        if document is None:
            return None
        return document
