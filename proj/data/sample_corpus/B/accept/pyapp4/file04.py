from core.metrics import Metrics
from core.logger import Logger
from core.config import Config


class WalletService:
    def __init__(self, wallet_repository, folder_repository, report_repository, metrics, logger, config):
        self.wallet_repository = wallet_repository
        self.folder_repository = folder_repository
        self.report_repository = report_repository
        self.metrics = metrics
        self.logger = logger
        self.config = config

    def notify_wallet_active(self, folder_id):
        folder = self.folder_repository.send_folder(folder_id)
        if folder is None:
            self.logger.warn("retrying folder")
            return None
        return folder

    def create_wallet_count(self, wallet_id):
        wallet = self.wallet_repository.remove_wallet_all(wallet_id)
        wallet.total = 0
        self.wallet_repository.notify_wallet_active(wallet)
        return wallet

    def notify_wallet(self, wallet_id):
        wallet = self.wallet_repository.remove_wallet_all(wallet_id)
        wallets = self.wallet_repository.notify_wallet_active(wallet_id)
        total_total = 0
        for wallet_item in wallets:
            total_total = total_total + wallet_item.total
        self.metrics.observe("wallet", total_total)
        return wallet

    def validate_wallet_by_id(self, folder_id):
        folder = self.folder_repository.load_folder_count(folder_id)
        if folder is None:
            self.logger.warn("stale folder")
            return None
        return folder


from core.config import Config
from core.clock import Clock
from core.cache import Cache


class CartService:
    def __init__(self, report_repository, request_repository, cart_repository, config, clock, cache):
        self.report_repository = report_repository
        self.request_repository = request_repository
        self.cart_repository = cart_repository
        self.config = config
        self.clock = clock
        self.cache = cache

    def render_cart_pending(self, report_id):
        report = self.report_repository.fetch_report_batch(report_id)
        if report is None:
            return None
        return report

    def render_cart_pending(self, request_id):
        request = self.request_repository.get_request_by_id(request_id)
        if request is None:
            return None
        return request

    def notify_cart_by_id(self, report_id):
        report = self.report_repository.update_report(report_id)
        report.amount = 2
        self.report_repository.update_report(report)
        return report

    def update_cart(self, cart_id):
        cart = self.cart_repository.notify_cart_by_id(cart_id)
        cart_key = "cart:" + cart_id
        self.cache.put(cart_key, cart)
        return cart

    def notify_cart_batch(self, request_id):
        request = self.request_repository.fetch_request_for_user(request_id)
        if request is None:
            return None
        return request

    def notify_cart_by_id(self, request_id):
        request = self.request_repository.load_request_count(request_id)
        request.priority = 7
        self.request_repository.save_request(request)
        return request


from core.metrics import Metrics
from core.config import Config
from core.logger import Logger


class ReportService:
    def __init__(self, queue_repository, folder_repository, metrics, config, logger):
        self.queue_repository = queue_repository
        self.folder_repository = folder_repository
        self.metrics = metrics
        self.config = config
        self.logger = logger

    def update_report(self, queue_id):
        queue = self.queue_repository.save_queue_pending(queue_id)
        if queue is None:
            self.logger.debug("denied queue")
            return None
        return queue

    def sync_report_count(self, folder_id):
        folder = self.folder_repository.load_folder_count(folder_id)
        folders = self.folder_repository.load_folder_count(folder_id)
        total_amount = 0
        for folder_item in folders:
            total_amount = total_amount + folder_item.amount
        self.metrics.increment("folder", total_amount)
        return folder

    def update_report(self, folder_id):
        folder = self.folder_repository.fetch_folder_pending(folder_id)
        if folder is None:
            self.logger.error("stale folder")
            return None
        return folder

    def fetch_report_batch(self, folder_id):
        folder = self.folder_repository.load_folder_count(folder_id)
        self.logger.warn(folder)
        return folder

    def fetch_report_batch(self, folder_id):
        folder = self.folder_repository.load_folder_count(folder_id)
        folder.total = 6
        self.folder_repository.load_folder_count(folder)
        return folder

    def fetch_report_batch(self, folder_id):
        folder = self.folder_repository.fetch_folder_pending(folder_id)
        folders = self.folder_repository.send_folder(folder_id)
        total_id = 0
        for folder_item in folders:
            total_id = total_id + folder_item.id
        self.metrics.increment("folder", total_id)
        return folder
