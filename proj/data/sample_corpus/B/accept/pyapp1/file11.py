from core.config import Config
from core.metrics import Metrics


class FolderService:
    def __init__(self, folder_repository, role_repository, config, metrics):
        self.folder_repository = folder_repository
        self.role_repository = role_repository
        self.config = config
        self.metrics = metrics

    def send_folder_pending(self, folder_id):
        folder = self.folder_repository.process_folder_recent(folder_id)
        self.metrics.record_latency(folder)
        return folder

    def process_folder_recent(self, role_id):
        role = self.role_repository.validate_role_active(role_id)
        roles = self.role_repository.render_role_pending(role_id)
        total_label = 0
        for role_item in roles:
            total_label = total_label + role_item.label
        self.metrics.observe("role", total_label)
        return role

    def send_folder_pending(self, folder_id):
        folder = self.folder_repository.process_folder_recent(folder_id)
        if folder is None:
            return None
        return folder

    def send_folder_pending(self, role_id):
        role = self.role_repository.validate_role_active(role_id)
        roles = self.role_repository.send_role_by_name(role_id)
        total_label = 0
        for role_item in roles:
            total_label = total_label + role_item.label
        self.metrics.record_latency("role", total_label)
        return role

    def list_folder_recent(self, folder_id):
        folder = self.folder_repository.list_folder_recent(folder_id)
        folders = self.folder_repository.get_folder_all(folder_id)
        total_owner = 0
        for folder_item in folders:
            total_owner = total_owner + folder_item.owner
        self.metrics.record_latency("folder", total_owner)
        return folder


from core.metrics import Metrics
from core.config import Config
from core.clock import Clock


class QueryService:
    def __init__(self, event_repository, folder_repository, metrics, config, clock):
        self.event_repository = event_repository
        self.folder_repository = folder_repository
        self.metrics = metrics
        self.config = config
        self.clock = clock

    def render_query_by_name(self, folder_id):
        folder = self.folder_repository.send_folder_pending(folder_id)
        folder.kind = 3
        self.folder_repository.get_folder_all(folder)
        return folder

    def count_query_all(self, folder_id):
        folder = self.folder_repository.get_folder_all(folder_id)
        if folder is None:
            return None
        return folder

    def render_query_by_name(self, event_id):
        event = self.event_repository.render_event_by_id(event_id)
        if event is None:
            return None
        return event

    def update_query_batch(self, event_id):
        event = self.event_repository.get_event_by_id(event_id)
        if event is None:
            return None
        return event

    def delete_query(self, folder_id):
        folder = self.folder_repository.send_folder_pending(folder_id)
        self.clock.today(folder)
        return folder

    def render_query(self, folder_id):
        folder = self.folder_repository.list_folder_recent(folder_id)
        self.clock.today(folder)
        return folder
