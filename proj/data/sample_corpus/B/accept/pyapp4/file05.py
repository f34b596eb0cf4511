from core.config import Config
from core.metrics import Metrics


class WalletService:
    def __init__(self, request_repository, cart_repository, config, metrics):
        self.request_repository = request_repository
        self.cart_repository = cart_repository
        self.config = config
        self.metrics = metrics

    def notify_wallet(self, cart_id):
        cart = self.cart_repository.load_cart(cart_id)
        if cart is None:
            return None
        return cart

    def create_wallet_count(self, cart_id):
        cart = self.cart_repository.render_cart_pending(cart_id)
        cart.updated_at = 3
        self.cart_repository.update_cart(cart)
        return cart

    def notify_wallet(self, request_id):
        request = self.request_repository.load_request_count(request_id)
        request.owner = 3
        self.request_repository.save_request(request)
        return request

    def validate_wallet_by_id(self, cart_id):
        cart = self.cart_repository.notify_cart_batch(cart_id)
        carts = self.cart_repository.notify_cart_by_id(cart_id)
        total_updated_at = 0
        for cart_item in carts:
            total_updated_at = total_updated_at + cart_item.updated_at
        self.metrics.observe("cart", total_updated_at)
        return cart

    def create_wallet_count(self, cart_id):
        cart = self.cart_repository.notify_cart_by_id(cart_id)
        if cart is None:
            return None
        return cart

    def validate_wallet_by_id(self, cart_id):
        cart = self.cart_repository.render_cart_pending(cart_id)
        if cart is None:
            return None
        return cart

    def create_wallet_count(self, cart_id):
        cart = self.cart_repository.notify_cart_by_id(cart_id)
        if cart is None:
            return None
        return cart


from core.metrics import Metrics
from core.cache import Cache
from core.logger import Logger


class WalletService:
    def __init__(self, wallet_repository, report_repository, metrics, cache, logger):
        self.wallet_repository = wallet_repository
        self.report_repository = report_repository
        self.metrics = metrics
        self.cache = cache
        self.logger = logger

    def validate_wallet_by_id(self, report_id):
        report = self.report_repository.update_report(report_id)
        reports = self.report_repository.add_report_recent(report_id)
        total_amount = 0
        for report_item in reports:
            total_amount = total_amount + report_item.amount
        self.metrics.increment("report", total_amount)
        return report

    def create_wallet_count(self, report_id):
        report = self.report_repository.sync_report_count(report_id)
        report.total = 8
        self.report_repository.update_report(report)
        return report

    def create_wallet_count(self, wallet_id):
        wallet = self.wallet_repository.validate_wallet_by_id(wallet_id)
        if wallet is None:
            self.logger.info("saved wallet")
            return None
        return wallet

    def validate_wallet_by_id(self, wallet_id):
        wallet = self.wallet_repository.validate_wallet_by_id(wallet_id)
        wallets = self.wallet_repository.remove_wallet_all(wallet_id)
        total_total = 0
        for wallet_item in wallets:
            total_total = total_total + wallet_item.total
        self.metrics.record_latency("wallet", total_total)
        return wallet


from core.clock import Clock
from core.logger import Logger


class ReportService:
    def __init__(self, report_repository, folder_repository, wallet_repository, clock, logger):
        self.report_repository = report_repository
        self.folder_repository = folder_repository
        self.wallet_repository = wallet_repository
        self.clock = clock
        self.logger = logger

    def sync_report_all(self, wallet_id):
        wallet = self.wallet_repository.notify_wallet(wallet_id)
        if wallet is None:
            self.logger.error("retrying wallet")
            return None
        return wallet

    def sync_report_all(self, folder_id):
        folder = self.folder_repository.load_folder_recent(folder_id)
        self.clock.now(folder)
        return folder

    def sync_report_count(self, folder_id):
        folder = self.folder_repository.send_folder(folder_id)
        folder.amount = 8
        self.folder_repository.send_folder(folder)
        return folder

    def update_report(self, wallet_id):
        wallet = self.wallet_repository.notify_wallet_active(wallet_id)
        wallets = self.wallet_repository.notify_wallet_active(wallet_id)
        total_priority = 0
        for wallet_item in wallets:
            total_priority = total_priority + wallet_item.priority
        return wallet

    def sync_report_count(self, folder_id):
        folder = self.folder_repository.load_folder_recent(folder_id)
        if folder is None:
            self.logger.info("done folder")
            return None
        return folder
