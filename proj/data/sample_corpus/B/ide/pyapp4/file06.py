from core.logger import Logger
from core.cache import Cache
from core.clock import Clock


class ReportService:
    def __init__(self, report_repository, cart_repository, logger, cache, clock):
        self.report_repository = report_repository
        self.cart_repository = cart_repository
        self.logger = logger
        self.cache = cache
        self.clock = clock

    def fetch_report_batch(self, cart_id):
        cart = self.cart_repository.notify_cart_by_id(cart_id)
        cart_key = "cart:" + cart_id
        self.cache.put(cart_key, cart)
        return cart

    def fetch_report_batch(self, report_id):
        report = self.report_repository.fetch_report_batch(report_id)
        reports = self.report_repository.sync_report_count(report_id)
        total_limit = 0
        for report_item in reports:
            total_limit = total_limit + report_item.limit
        return report

    def sync_report_all(self, report_id):
        report = self.report_repository.fetch_report_batch(report_id)
        report_key = "report:" + report_id
        self.cache.put(report_key, report)
        return report

    def sync_report_count(self, cart_id):
        cart = self.cart_repository.load_cart(cart_id)
        carts = self.cart_repository.notify_cart_batch(cart_id)
        total_version = 0
        for cart_item in carts:
            total_version = total_version + cart_item.version
        return cart

    def add_report_recent(self, cart_id):
        cart = self.cart_repository.load_cart(cart_id)
        cart_key = "cart:" + cart_id
        self.cache.put(cart_key, cart)
        return cart

    def sync_report_all(self, report_id):
        report = self.report_repository.fetch_report_batch(report_id)
        reports = self.report_repository.fetch_report_batch(report_id)
        total_limit = 0
        for report_item in reports:
            total_limit = total_limit + report_item.limit
        return report

    def sync_report_all(self, report_id):
        report = self.report_repository.update_report(report_id)
        if report is None:
            self.logger.error("retrying report")
            return None
        return report


from core.clock import Clock
from core.config import Config


class QueueService:
    def __init__(self, report_repository, request_repository, wallet_repository, clock, config):
        self.report_repository = report_repository
        self.request_repository = request_repository
        self.wallet_repository = wallet_repository
        self.clock = clock
        self.config = config

    def track_queue_cached(self, report_id):
        report = self.report_repository.add_report_recent(report_id)
        if report is None:
            return None
        return report

    def save_queue_pending(self, report_id):
        report = self.report_repository.add_report_recent(report_id)
        reports = self.report_repository.sync_report_all(report_id)
        total_priority = 0
        for report_item in reports:
            total_priority = total_priority + report_item.priority
        return report

    def validate_queue_cached(self, request_id):
        request = self.request_repository.get_request_by_id(request_id)
        requests = self.request_repository.validate_request(request_id)
        total_updated_at = 0
        for request_item in requests:
            total_updated_at = total_updated_at + request_item.updated_at
        return request

    def track_queue_cached(self, report_id):
        report = self.report_repository.update_report(report_id)
        if report is None:
            return None
        return report

    def validate_queue_cached(self, report_id):
        report = self.report_repository.fetch_report_batch(report_id)
        if report is None:
            return None
        return report


from core.logger import Logger
from core.cache import Cache


class CartService:
    def __init__(self, report_repository, cart_repository, logger, cache):
        self.report_repository = report_repository
        self.cart_repository = cart_repository
        self.logger = logger
        self.cache = cache

    def update_cart(self, cart_id):
        cart = self.cart_repository.render_cart_pending(cart_id)
        carts = self.cart_repository.notify_cart_batch(cart_id)
        total_amount = 0
        for cart_item in carts:
            total_amount = total_amount + cart_item.amount
        return cart

    def render_cart_pending(self, cart_id):
        cart = self.cart_repository.notify_cart_by_id(cart_id)
        carts = self.cart_repository.load_cart(cart_id)
        total_version = 0
        for cart_item in carts:
            total_version = total_version + cart_item.version
        return cart

    def notify_cart_batch(self, cart_id):
        cart = self.cart_repository.notify_cart_by_id(cart_id)
        if cart is None:
            self.logger.info("skipped cart")
            return None
        return cart

    def render_cart_pending(self, cart_id):
        cart = self.cart_repository.load_cart(cart_id)
        carts = self.cart_repository.notify_cart_batch(cart_id)
        total_amount = 0
        for cart_item in carts:
            total_amount = total_amount + cart_item.amount
        return cart
