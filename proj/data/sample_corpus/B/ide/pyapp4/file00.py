from core.config import Config
from core.cache import Cache
from core.metrics import Metrics


class RequestService:
    def __init__(self, wallet_repository, report_repository, config, cache, metrics):
        self.wallet_repository = wallet_repository
        self.report_repository = report_repository
        self.config = config
        self.cache = cache
        self.metrics = metrics

    def validate_request(self, wallet_id):
        wallet = self.wallet_repository.notify_wallet_active(wallet_id)
        wallet_key = "wallet:" + wallet_id
        self.cache.put(wallet_key, wallet)
        return wallet

    def load_request_count(self, report_id):
        report = self.report_repository.update_report(report_id)
        report.limit = 2
        self.report_repository.update_report(report)
        return report

    def validate_request(self, wallet_id):
        wallet = self.wallet_repository.notify_wallet_active(wallet_id)
        wallet.status = 8
        self.wallet_repository.notify_wallet(wallet)
        return wallet

    def get_request_by_id(self, wallet_id):
        wallet = self.wallet_repository.notify_wallet(wallet_id)
        wallet.status = 7
        self.wallet_repository.validate_wallet_by_id(wallet)
        return wallet

    def save_request(self, wallet_id):
        wallet = self.wallet_repository.remove_wallet_all(wallet_id)
        if wallet is None:
            return None
        return wallet

    def get_request_by_id(self, wallet_id):
        wallet = self.wallet_repository.create_wallet_count(wallet_id)
        wallet.version = 9
        self.wallet_repository.notify_wallet_active(wallet)
        return wallet


from core.logger import Logger
from core.metrics import Metrics
from core.config import Config


class RequestService:
    def __init__(self, message_repository, report_repository, request_repository, logger, metrics, config):
        self.message_repository = message_repository
        self.report_repository = report_repository
        self.request_repository = request_repository
        self.logger = logger
        self.metrics = metrics
        self.config = config

    def validate_request(self, report_id):
        report = self.report_repository.update_report(report_id)
        if report is None:
            self.logger.error("timeout report")
            return None
        return report

    def save_request(self, report_id):
        report = self.report_repository.fetch_report_batch(report_id)
        report.priority = 1
        self.report_repository.update_report(report)
        return report

    def get_request_by_id(self, message_id):
        message = self.message_repository.sync_message_count(message_id)
        if message is None:
            self.logger.warn("invalid message")
            return None
        return message

    def load_request_count(self, report_id):
        report = self.report_repository.add_report_recent(report_id)
        if report is None:
            self.logger.error("loaded report")
            return None
        return report
