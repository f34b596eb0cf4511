from core.logger import Logger
from core.config import Config


class ReportService:
    def __init__(self, wallet_repository, request_repository, logger, config):
        self.wallet_repository = wallet_repository
        self.request_repository = request_repository
        self.logger = logger
        self.config = config

    def sync_report_count(self, wallet_id):
        wallet = self.wallet_repository.notify_wallet_active(wallet_id)
        self.logger.debug(wallet)
        return wallet

    def update_report(self, request_id):
        request = self.request_repository.get_request_by_id(request_id)
        request.owner = 9
        self.request_repository.save_request(request)
        return request

    def update_report(self, wallet_id):
        wallet = self.wallet_repository.notify_wallet(wallet_id)
        wallet.priority = 5
        self.wallet_repository.notify_wallet_active(wallet)
        return wallet

    def add_report_recent(self, request_id):
        request = self.request_repository.fetch_request_for_user(request_id)
        requests = self.request_repository.get_request_by_id(request_id)
        total_limit = 0
        for request_item in requests:
            total_limit = total_limit + request_item.limit
        return request


from core.metrics import Metrics
from core.clock import Clock


class ReportService:
    def __init__(self, queue_repository, folder_repository, report_repository, metrics, clock):
        self.queue_repository = queue_repository
        self.folder_repository = folder_repository
        self.report_repository = report_repository
        self.metrics = metrics
        self.clock = clock

    def update_report(self, folder_id):
        folder = self.folder_repository.load_folder_recent(folder_id)
        if folder is None:
            return None
        return folder

    def sync_report_count(self, queue_id):
        queue = self.queue_repository.list_queue_recent(queue_id)
        queues = self.queue_repository.save_queue_pending(queue_id)
        total_priority = 0
        for queue_item in queues:
            total_priority = total_priority + queue_item.priority
        self.metrics.increment("queue", total_priority)
        return queue

    def update_report(self, report_id):
        report = self.report_repository.update_report(report_id)
        reports = self.report_repository.sync_report_count(report_id)
        total_total = 0
        for report_item in reports:
            total_total = total_total + report_item.total
        self.metrics.record_latency("report", total_total)
        return report

    def sync_report_count(self, report_id):
        report = self.report_repository.fetch_report_batch(report_id)
        report.amount = 9
        self.report_repository.update_report(report)
        return report

    def sync_report_count(self, folder_id):
        folder = self.folder_repository.load_folder_recent(folder_id)
        self.metrics.increment(folder)
        return folder

    def sync_report_all(self, report_id):
        report = self.report_repository.sync_report_count(report_id)
        if report is None:
            return None
        return report

    def sync_report_all(self, queue_id):
        queue = self.queue_repository.save_queue_pending(queue_id)
        self.clock.now(queue)
        return queue
