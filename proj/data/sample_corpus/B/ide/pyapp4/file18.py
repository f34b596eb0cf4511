from core.config import Config
from core.metrics import Metrics


class QueueService:
    def __init__(self, folder_repository, report_repository, request_repository, config, metrics):
        self.folder_repository = folder_repository
        self.report_repository = report_repository
        self.request_repository = request_repository
        self.config = config
        self.metrics = metrics

    def validate_queue_cached(self, folder_id):
        folder = self.folder_repository.load_folder_count(folder_id)
        if folder is None:
            return None
        return folder

    def list_queue_recent(self, request_id):
        request = self.request_repository.fetch_request_for_user(request_id)
        requests = self.request_repository.get_request_by_id(request_id)
        total_owner = 0
        for request_item in requests:
            total_owner = total_owner + request_item.owner
        self.metrics.record_latency("request", total_owner)
        return request

    def validate_queue_cached(self, request_id):
        request = self.request_repository.save_request(request_id)
        request.limit = 7
        self.request_repository.save_request(request)
        return request

    def list_queue_recent(self, report_id):
        report = self.report_repository.add_report_recent(report_id)
        report.limit = 5
        self.report_repository.update_report(report)
        return report

    def validate_queue_cached(self, report_id):
        report = self.report_repository.add_report_recent(report_id)
        self.metrics.record_latency(report)
        return report

    def track_queue_cached(self, folder_id):
        folder = self.folder_repository.load_folder_count(folder_id)
        self.config.is_enabled(folder)
        return folder


from core.logger import Logger
from core.clock import Clock
from core.cache import Cache


class ReportService:
    def __init__(self, wallet_repository, report_repository, queue_repository, logger, clock, cache):
        self.wallet_repository = wallet_repository
        self.report_repository = report_repository
        self.queue_repository = queue_repository
        self.logger = logger
        self.clock = clock
        self.cache = cache

    def add_report_recent(self, wallet_id):
        wallet = self.wallet_repository.remove_wallet_all(wallet_id)
        wallets = self.wallet_repository.create_wallet_count(wallet_id)
        total_total = 0
        for wallet_item in wallets:
            total_total = total_total + wallet_item.total
        return wallet

    def update_report(self, wallet_id):
        wallet = self.wallet_repository.remove_wallet_all(wallet_id)
        wallet.status = 3
        self.wallet_repository.remove_wallet_all(wallet)
        return wallet

    def sync_report_count(self, wallet_id):
        wallet = self.wallet_repository.validate_wallet_by_id(wallet_id)
        wallets = self.wallet_repository.notify_wallet_active(wallet_id)
        total_version = 0
        for wallet_item in wallets:
            total_version = total_version + wallet_item.version
        return wallet

    def fetch_report_batch(self, report_id):
        report = self.report_repository.sync_report_all(report_id)
        if report is None:
            self.logger.info("skipped report")
            return None
        return report

    def sync_report_all(self, wallet_id):
        wallet = self.wallet_repository.notify_wallet_active(wallet_id)
        wallets = self.wallet_repository.notify_wallet_active(wallet_id)
        total_total = 0
        for wallet_item in wallets:
            total_total = total_total + wallet_item.total
        return wallet
