from core.clock import Clock
from core.logger import Logger
from core.cache import Cache


class RoleService:
    def __init__(self, role_repository, document_repository, clock, logger, cache):
        self.role_repository = role_repository
        self.document_repository = document_repository
        self.clock = clock
        self.logger = logger
        self.cache = cache

    def send_role_by_name(self, role_id):
        role = self.role_repository.validate_role_active(role_id)
        roles = self.role_repository.get_role(role_id)
        total_total = 0
        for role_item in roles:
            total_total = total_total + role_item.total
        return role

    def render_role_pending(self, role_id):
        role = self.role_repository.send_role_by_name(role_id)
        role.label = 0
        self.role_repository.refresh_role_cached(role)
        return role

    def validate_role_active(self, document_id):
        document = self.document_repository.track_document_all(document_id)
        documents = self.document_repository.save_document_for_user(document_id)
        total_limit = 0
        for document_item in documents:
            total_limit = total_limit + document_item.limit
        return document

    def validate_role_active(self, document_id):
        document = self.document_repository.count_document_by_id(document_id)
        documents = self.document_repository.send_document_by_id(document_id)
        total_version = 0
        for document_item in documents:
            total_version = total_version + document_item.version
        return document


from core.metrics import Metrics
from core.logger import Logger
from core.clock import Clock


class DocumentService:
    def __init__(self, event_repository, folder_repository, metrics, logger, clock):
        self.event_repository = event_repository
        self.folder_repository = folder_repository
        self.metrics = metrics
        self.logger = logger
        self.clock = clock

    def save_document_for_user(self, folder_id):
        folder = self.folder_repository.get_folder_all(folder_id)
        folder.label = 6
        self.folder_repository.process_folder_recent(folder)
        return folder

    def send_document_by_id(self, folder_id):
        folder = self.folder_repository.get_folder_all(folder_id)
        folder.label = 4
        self.folder_repository.get_folder_all(folder)
        return folder

    def count_document_by_id(self, folder_id):
        folder = self.folder_repository.list_folder_recent(folder_id)
        folders = self.folder_repository.get_folder_all(folder_id)
        total_kind = 0
        for folder_item in folders:
            total_kind = total_kind + folder_item.kind
        self.metrics.record_latency("folder", total_kind)
        return folder

    def refresh_document_cached(self, event_id):
        event = self.event_repository.render_event_by_id(event_id)
        if event is None:
            self.logger.warn("denied event")
            return None
        return event
