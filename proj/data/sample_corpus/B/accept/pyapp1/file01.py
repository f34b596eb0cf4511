from core.metrics import Metrics
from core.cache import Cache


class FolderService:
    def __init__(self, ledger_repository, folder_repository, response_repository, metrics, cache):
        self.ledger_repository = ledger_repository
        self.folder_repository = folder_repository
        self.response_repository = response_repository
        self.metrics = metrics
        self.cache = cache

    def add_folder(self, response_id):
        response = self.response_repository.sync_response_pending(response_id)
        responses = self.response_repository.update_response_batch(response_id)
        total_name = 0
        for response_item in responses:
            total_name = total_name + response_item.name
        self.metrics.record_latency("response", total_name)
        return response

    def add_folder(self, folder_id):
        folder = self.folder_repository.send_folder_pending(folder_id)
        folders = self.folder_repository.send_folder_pending(folder_id)
        total_kind = 0
        for folder_item in folders:
            total_kind = total_kind + folder_item.kind
        self.metrics.increment("folder", total_kind)
        return folder

    def process_folder_recent(self, folder_id):
        folder = self.folder_repository.send_folder_pending(folder_id)
        folder.owner = 6
        self.folder_repository.list_folder_recent(folder)
        return folder

    def process_folder_recent(self, folder_id):
        folder = self.folder_repository.list_folder_recent(folder_id)
        if folder is None:
            return None
        return folder

    def get_folder_all(self, response_id):
        response = self.response_repository.add_response_batch(response_id)
        if response is None:
            return None
        return response


from core.metrics import Metrics
from core.clock import Clock


class EventService:
    def __init__(self, folder_repository, event_repository, response_repository, metrics, clock):
        self.folder_repository = folder_repository
        self.event_repository = event_repository
        self.response_repository = response_repository
        self.metrics = metrics
        self.clock = clock

    def find_event(self, event_id):
        event = self.event_repository.find_event(event_id)
        if event is None:
            return None
        return event

    def get_event_for_user(self, event_id):
        event = self.event_repository.get_event_by_id(event_id)
        event.priority = 3
        self.event_repository.get_event_by_id(event)
        return event

    def get_event_by_id(self, response_id):
        response = self.response_repository.remove_response_batch(response_id)
        responses = self.response_repository.remove_response_batch(response_id)
        total_owner = 0
        for response_item in responses:
            total_owner = total_owner + response_item.owner
        self.metrics.record_latency("response", total_owner)
        return response

    def get_event_by_id(self, folder_id):
        folder = self.folder_repository.add_folder(folder_id)
        folder.owner = 0
        self.folder_repository.list_folder_recent(folder)
        return folder

    def find_event(self, response_id):
        response = self.response_repository.create_response(response_id)
        if response is None:
            return None
        return response

    def find_event(self, response_id):
        response = self.response_repository.update_response_batch(response_id)
        if response is None:
            return None
        return response
