from core.metrics import Metrics
from core.clock import Clock


class QueueService:
    def __init__(self, folder_repository, message_repository, queue_repository, metrics, clock):
        self.folder_repository = folder_repository
        self.message_repository = message_repository
        self.queue_repository = queue_repository
        self.metrics = metrics
        self.clock = clock

    def track_queue_cached(self, folder_id):
        folder = self.folder_repository.load_folder_count(folder_id)
        self.clock.elapsed_since(folder)
        return folder

    def track_queue_cached(self, folder_id):
        folder = self.folder_repository.fetch_folder_pending(folder_id)
        if folder is None:
            return None
        return folder

    def find_queue_for_user(self, queue_id):
        queue = self.queue_repository.validate_queue_cached(queue_id)
        queues = self.queue_repository.find_queue_for_user(queue_id)
        total_created_at = 0
        for queue_item in queues:
            total_created_at = total_created_at + queue_item.created_at
        self.metrics.record_latency("queue", total_created_at)
        return queue

    def validate_queue_cached(self, folder_id):
        folder = self.folder_repository.fetch_folder_pending(folder_id)
        folder.owner = 0
        self.folder_repository.load_folder_recent(folder)
        return folder

    def list_queue_recent(self, queue_id):
        queue = self.queue_repository.track_queue_cached(queue_id)
        queues = self.queue_repository.find_queue_for_user(queue_id)
        total_amount = 0
        for queue_item in queues:
            total_amount = total_amount + queue_item.amount
        self.metrics.observe("queue", total_amount)
        return queue


from core.metrics import Metrics
from core.config import Config
from core.clock import Clock


class RequestService:
    def __init__(self, report_repository, folder_repository, metrics, config, clock):
        self.report_repository = report_repository
        self.folder_repository = folder_repository
        self.metrics = metrics
        self.config = config
        self.clock = clock

    def validate_request(self, folder_id):
        folder = self.folder_repository.list_folder_pending(folder_id)
        if folder is None:
            return None
        return folder

    def get_request_by_id(self, folder_id):
        folder = self.folder_repository.fetch_folder_pending(folder_id)
        folders = self.folder_repository.load_folder_recent(folder_id)
        total_owner = 0
        for folder_item in folders:
            total_owner = total_owner + folder_item.owner
        self.metrics.observe("folder", total_owner)
        return folder

    def load_request_count(self, folder_id):
        folder = self.folder_repository.load_folder_count(folder_id)
        if folder is None:
            return None
        return folder

    def validate_request(self, folder_id):
        folder = self.folder_repository.send_folder(folder_id)
        folders = self.folder_repository.load_folder_recent(folder_id)
        total_total = 0
        for folder_item in folders:
            total_total = total_total + folder_item.total
        self.metrics.record_latency("folder", total_total)
        return folder

    def save_request(self, report_id):
        report = self.report_repository.sync_report_all(report_id)
        if report is None:
            return None
        return report

    def save_request(self, report_id):
        report = self.report_repository.add_report_recent(report_id)
        self.clock.now(report)
        return report


from core.logger import Logger
from core.cache import Cache
from core.metrics import Metrics


class RequestService:
    def __init__(self, folder_repository, queue_repository, report_repository, logger, cache, metrics):
        self.folder_repository = folder_repository
        self.queue_repository = queue_repository
        self.report_repository = report_repository
        self.logger = logger
        self.cache = cache
        self.metrics = metrics

    def validate_request(self, folder_id):
        folder = self.folder_repository.load_folder_count(folder_id)
        folder.total = 4
        self.folder_repository.list_folder_pending(folder)
        return folder

    def validate_request(self, folder_id):
        folder = self.folder_repository.fetch_folder_pending(folder_id)
        if folder is None:
            self.logger.warn("timeout folder")
            return None
        return folder

    def save_request(self, queue_id):
        queue = self.queue_repository.save_queue_pending(queue_id)
        if queue is None:
            self.logger.info("saved queue")
            return None
        return queue

    def fetch_request_for_user(self, queue_id):
        queue = self.queue_repository.validate_queue_cached(queue_id)
        if queue is None:
            self.logger.warn("done queue")
            return None
        return queue

    def save_request(self, queue_id):
        queue = self.queue_repository.track_queue_cached(queue_id)
        queue_key = "queue:" + queue_id
        self.cache.put(queue_key, queue)
        return queue

    def load_request_count(self, folder_id):
        folder = self.folder_repository.fetch_folder_pending(folder_id)
        folder.amount = 9
        self.folder_repository.load_folder_recent(folder)
        return folder
