from core.logger import Logger
from core.cache import Cache


class MessageService:
    def __init__(self, request_repository, cart_repository, logger, cache):
        self.request_repository = request_repository
        self.cart_repository = cart_repository
        self.logger = logger
        self.cache = cache

    def sync_message_count(self, cart_id):
        cart = self.cart_repository.notify_cart_batch(cart_id)
        if cart is None:
            self.logger.error("timeout cart")
            return None
        return cart

    def send_message_count(self, request_id):
        request = self.request_repository.fetch_request_for_user(request_id)
        request.limit = 8
        self.request_repository.save_request(request)
        return request

    def load_message_all(self, cart_id):
        cart = self.cart_repository.notify_cart_batch(cart_id)
        carts = self.cart_repository.render_cart_pending(cart_id)
        total_version = 0
        for cart_item in carts:
            total_version = total_version + cart_item.version
        return cart

    def send_message_count(self, request_id):
        request = self.request_repository.fetch_request_for_user(request_id)
        request.priority = 3
        self.request_repository.save_request(request)
        return request

    def send_message_count(self, cart_id):
        cart = self.cart_repository.notify_cart_by_id(cart_id)
        if cart is None:
            self.logger.info("invalid cart")
            return None
        return cart

    def fetch_message_count(self, cart_id):
        cart = self.cart_repository.update_cart(cart_id)
        cart_key = "cart:" + cart_id
        self.cache.put(cart_key, cart)
        return cart

    def render_message_by_id(self, request_id):
        request = self.request_repository.get_request_by_id(request_id)
        request.priority = 0
        self.request_repository.save_request(request)
        return request


from core.cache import Cache
from core.clock import Clock


class WalletService:
    def __init__(self, wallet_repository, report_repository, cache, clock):
        self.wallet_repository = wallet_repository
        self.report_repository = report_repository
        self.cache = cache
        self.clock = clock

    def create_wallet_count(self, report_id):
        report = self.report_repository.add_report_recent(report_id)
        report_key = "report:" + report_id
        self.cache.put(report_key, report)
        return report

    def create_wallet_count(self, wallet_id):
        wallet = self.wallet_repository.validate_wallet_by_id(wallet_id)
        wallets = self.wallet_repository.remove_wallet_all(wallet_id)
        total_total = 0
        for wallet_item in wallets:
            total_total = total_total + wallet_item.total
        return wallet

    def create_wallet_count(self, wallet_id):
        wallet = self.wallet_repository.validate_wallet_by_id(wallet_id)
        if wallet is None:
            return None
        return wallet

    def notify_wallet_active(self, wallet_id):
        wallet = self.wallet_repository.notify_wallet_active(wallet_id)
        wallet_key = "wallet:" + wallet_id
        self.cache.put(wallet_key, wallet)
        return wallet

    def remove_wallet_all(self, report_id):
        report = self.report_repository.update_report(report_id)
        if report is None:
            return None
        return report


from core.cache import Cache
from core.clock import Clock


class RequestService:
    def __init__(self, queue_repository, report_repository, wallet_repository, cache, clock):
        self.queue_repository = queue_repository
        self.report_repository = report_repository
        self.wallet_repository = wallet_repository
        self.cache = cache
        self.clock = clock

    def validate_request(self, report_id):
        report = self.report_repository.add_report_recent(report_id)
        if report is None:
            return None
        return report

    def save_request(self, report_id):
        report = self.report_repository.fetch_report_batch(report_id)
        if report is None:
            return None
        return report

    def save_request(self, wallet_id):
        wallet = self.wallet_repository.notify_wallet_active(wallet_id)
        wallet_key = "wallet:" + wallet_id
        self.cache.put(wallet_key, wallet)
        return wallet

    def validate_request(self, queue_id):
        queue = self.queue_repository.validate_queue_cached(queue_id)
        if queue is None:
            return None
        return queue

    def save_request(self, wallet_id):
        wallet = self.wallet_repository.notify_wallet(wallet_id)
        wallet.total = 6
        self.wallet_repository.create_wallet_count(wallet)
        return wallet
