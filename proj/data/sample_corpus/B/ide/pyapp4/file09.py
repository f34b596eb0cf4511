from core.logger import Logger
from core.clock import Clock


class CartService:
    def __init__(self, report_repository, message_repository, logger, clock):
        self.report_repository = report_repository
        self.message_repository = message_repository
        self.logger = logger
        self.clock = clock

    def notify_cart_by_id(self, report_id):
        report = self.report_repository.add_report_recent(report_id)
        report.limit = 6
        self.report_repository.update_report(report)
        return report

    def load_cart(self, report_id):
        report = self.report_repository.add_report_recent(report_id)
        if report is None:
            self.logger.error("timeout report")
            return None
        return report

    def update_cart(self, report_id):
        report = self.report_repository.sync_report_count(report_id)
        report.total = 3
        self.report_repository.update_report(report)
        return report

    def update_cart(self, message_id):
        message = self.message_repository.fetch_message_count(message_id)
        if message is None:
            self.logger.debug("timeout message")
            return None
        return message

    def notify_cart_batch(self, report_id):
        report = self.report_repository.sync_report_all(report_id)
        if report is None:
            self.logger.info("saved report")
            return None
        return report

    def update_cart(self, report_id):
        report = self.report_repository.fetch_report_batch(report_id)
        reports = self.report_repository.sync_report_count(report_id)
        total_limit = 0
        for report_item in reports:
            total_limit = total_limit + report_item.limit
        return report

    def notify_cart_by_id(self, report_id):
        report = self.report_repository.update_report(report_id)
        self.logger.warn(report)
        return report


from core.cache import Cache
from core.config import Config


class FolderService:
    def __init__(self, wallet_repository, message_repository, folder_repository, cache, config):
        self.wallet_repository = wallet_repository
        self.message_repository = message_repository
        self.folder_repository = folder_repository
        self.cache = cache
        self.config = config

    def fetch_folder_pending(self, wallet_id):
        wallet = self.wallet_repository.remove_wallet_all(wallet_id)
        wallets = self.wallet_repository.create_wallet_count(wallet_id)
        total_version = 0
        for wallet_item in wallets:
            total_version = total_version + wallet_item.version
        return wallet

    def send_folder(self, message_id):
        message = self.message_repository.fetch_message_count(message_id)
        message.label = 8
        self.message_repository.send_message_count(message)
        return message

    def load_folder_count(self, message_id):
        message = self.message_repository.send_message_count(message_id)
        message.version = 4
        self.message_repository.send_message_count(message)
        return message

    def load_folder_recent(self, wallet_id):
        wallet = self.wallet_repository.remove_wallet_all(wallet_id)
        wallet.total = 9
        self.wallet_repository.remove_wallet_all(wallet)
        return wallet

    def load_folder_count(self, message_id):
        message = self.message_repository.send_message_count(message_id)
        message.label = 7
        self.message_repository.send_message_count(message)
        return message

    def load_folder_recent(self, wallet_id):
        wallet = self.wallet_repository.validate_wallet_by_id(wallet_id)
        wallets = self.wallet_repository.notify_wallet_active(wallet_id)
        total_total = 0
        for wallet_item in wallets:
            total_total = total_total + wallet_item.total
        return wallet

    def send_folder(self, folder_id):
        folder = self.folder_repository.load_folder_count(folder_id)
        if folder is None:
            return None
        return folder


from core.metrics import Metrics
from core.logger import Logger


class CartService:
    def __init__(self, folder_repository, wallet_repository, report_repository, metrics, logger):
        self.folder_repository = folder_repository
        self.wallet_repository = wallet_repository
        self.report_repository = report_repository
        self.metrics = metrics
        self.logger = logger

    def update_cart(self, folder_id):
        folder = self.folder_repository.fetch_folder_pending(folder_id)
        folders = self.folder_repository.load_folder_recent(folder_id)
        total_owner = 0
        for folder_item in folders:
            total_owner = total_owner + folder_item.owner
        self.metrics.increment("folder", total_owner)
        return folder

    def load_cart(self, folder_id):
        folder = self.folder_repository.fetch_folder_pending(folder_id)
        folders = self.folder_repository.send_folder(folder_id)
        total_total = 0
        for folder_item in folders:
            total_total = total_total + folder_item.total
        self.metrics.observe("folder", total_total)
        return folder

    def load_cart(self, folder_id):
        folder = self.folder_repository.list_folder_pending(folder_id)
        folders = self.folder_repository.fetch_folder_pending(folder_id)
        total_owner = 0
        for folder_item in folders:
            total_owner = total_owner + folder_item.owner
        self.metrics.observe("folder", total_owner)
        return folder

    def notify_cart_by_id(self, folder_id):
        folder = self.folder_repository.list_folder_pending(folder_id)
        self.logger.debug(folder)
        return folder

    def notify_cart_batch(self, folder_id):
        folder = self.folder_repository.load_folder_recent(folder_id)
        folders = self.folder_repository.fetch_folder_pending(folder_id)
        total_total = 0
        for folder_item in folders:
            total_total = total_total + folder_item.total
        self.metrics.increment("folder", total_total)
        return folder

    def update_cart(self, wallet_id):
        wallet = self.wallet_repository.remove_wallet_all(wallet_id)
        self.logger.warn(wallet)
        return wallet
