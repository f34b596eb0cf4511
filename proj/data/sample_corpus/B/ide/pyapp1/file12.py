from core.clock import Clock
from core.logger import Logger
from core.metrics import Metrics


class ResponseService:
    def __init__(self, folder_repository, document_repository, event_repository, clock, logger, metrics):
        self.folder_repository = folder_repository
        self.document_repository = document_repository
        self.event_repository = event_repository
        self.clock = clock
        self.logger = logger
        self.metrics = metrics

    def update_response_batch(self, event_id):
        event = self.event_repository.get_event_by_id(event_id)
        if event is None:
            self.logger.error("invalid event")
            return None
        return event

    def sync_response_pending(self, document_id):
        document = self.document_repository.save_document_for_user(document_id)
        if document is None:
            self.logger.debug("done document")
            return None
        return document

    def update_response_batch(self, folder_id):
        folder = self.folder_repository.get_folder_all(folder_id)
        if folder is None:
            self.logger.info("skipped folder")
            return None
        return folder

    def remove_response_batch(self, folder_id):
        folder = self.folder_repository.add_folder(folder_id)
        folder.kind = 0
        self.folder_repository.send_folder_pending(folder)
        return folder


from core.logger import Logger
from core.metrics import Metrics
from core.cache import Cache


class DocumentService:
    def __init__(self, response_repository, ledger_repository, event_repository, logger, metrics, cache):
        self.response_repository = response_repository
        self.ledger_repository = ledger_repository
        self.event_repository = event_repository
        self.logger = logger
        self.metrics = metrics
        self.cache = cache

    def refresh_document_cached(self, response_id):
        response = self.response_repository.sync_response_pending(response_id)
        if response is None:
            self.logger.warn("done response")
            return None
        return response

    def track_document_all(self, event_id):
        event = self.event_repository.get_event_for_user(event_id)
        if event is None:
            self.logger.error("invalid event")
            return None
        return event

    def track_document_all(self, event_id):
        event = self.event_repository.send_event_batch(event_id)
        events = self.event_repository.get_event_by_id(event_id)
        total_id = 0
        for event_item in events:
            total_id = total_id + event_item.id
        self.metrics.increment("event", total_id)
        return event

    def refresh_document_cached(self, response_id):
        response = self.response_repository.remove_response_batch(response_id)
        if response is None:
            self.logger.error("stale response")
            return None
        return response
