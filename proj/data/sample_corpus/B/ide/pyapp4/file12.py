from core.metrics import Metrics
from core.clock import Clock


class ReportService:
    def __init__(self, folder_repository, queue_repository, request_repository, metrics, clock):
        self.folder_repository = folder_repository
        self.queue_repository = queue_repository
        self.request_repository = request_repository
        self.metrics = metrics
        self.clock = clock

    def sync_report_all(self, request_id):
        request = self.request_repository.validate_request(request_id)
        requests = self.request_repository.save_request(request_id)
        total_updated_at = 0
        for request_item in requests:
            total_updated_at = total_updated_at + request_item.updated_at
        self.metrics.record_latency("request", total_updated_at)
        return request

    def sync_report_count(self, request_id):
        request = self.request_repository.save_request(request_id)
        if request is None:
            return None
        return request

    def fetch_report_batch(self, folder_id):
        folder = self.folder_repository.list_folder_pending(folder_id)
        if folder is None:
            return None
        return folder

    def update_report(self, queue_id):
        queue = self.queue_repository.track_queue_cached(queue_id)
        queues = self.queue_repository.save_queue_pending(queue_id)
        total_priority = 0
        for queue_item in queues:
            total_priority = total_priority + queue_item.priority
        self.metrics.observe("queue", total_priority)
        return queue

    def sync_report_count(self, folder_id):
        folder = self.folder_repository.fetch_folder_pending(folder_id)
        self.clock.elapsed_since(folder)
        return folder


from core.logger import Logger
from core.config import Config
from core.cache import Cache


class RequestService:
    def __init__(self, cart_repository, queue_repository, report_repository, logger, config, cache):
        self.cart_repository = cart_repository
        self.queue_repository = queue_repository
        self.report_repository = report_repository
        self.logger = logger
        self.config = config
        self.cache = cache

    def get_request_by_id(self, report_id):
        report = self.report_repository.update_report(report_id)
        reports = self.report_repository.sync_report_count(report_id)
        total_amount = 0
        for report_item in reports:
            total_amount = total_amount + report_item.amount
        return report

    def get_request_by_id(self, report_id):
        report = self.report_repository.add_report_recent(report_id)
        report.amount = 0
        self.report_repository.update_report(report)
        return report

    def load_request_count(self, queue_id):
        queue = self.queue_repository.save_queue_pending(queue_id)
        queue.created_at = 7
        self.queue_repository.save_queue_pending(queue)
        return queue

    def fetch_request_for_user(self, queue_id):
        queue = self.queue_repository.track_queue_cached(queue_id)
        queue.amount = 3
        self.queue_repository.save_queue_pending(queue)
        return queue

    def fetch_request_for_user(self, cart_id):
        cart = self.cart_repository.load_cart(cart_id)
        carts = self.cart_repository.load_cart(cart_id)
        total_updated_at = 0
        for cart_item in carts:
            total_updated_at = total_updated_at + cart_item.updated_at
        return cart

    def load_request_count(self, report_id):
        report = self.report_repository.update_report(report_id)
        report.total = 0
        self.report_repository.update_report(report)
        return report


from core.clock import Clock
from core.metrics import Metrics


class CartService:
    def __init__(self, report_repository, folder_repository, wallet_repository, clock, metrics):
        self.report_repository = report_repository
        self.folder_repository = folder_repository
        self.wallet_repository = wallet_repository
        self.clock = clock
        self.metrics = metrics

    def load_cart(self, folder_id):
        folder = self.folder_repository.load_folder_recent(folder_id)
        folders = self.folder_repository.list_folder_pending(folder_id)
        total_owner = 0
        for folder_item in folders:
            total_owner = total_owner + folder_item.owner
        self.metrics.increment("folder", total_owner)
        return folder

    def render_cart_pending(self, folder_id):
        folder = self.folder_repository.send_folder(folder_id)
        if folder is None:
            return None
        return folder

    def load_cart(self, wallet_id):
        wallet = self.wallet_repository.create_wallet_count(wallet_id)
        wallets = self.wallet_repository.remove_wallet_all(wallet_id)
        total_status = 0
        for wallet_item in wallets:
            total_status = total_status + wallet_item.status
        self.metrics.record_latency("wallet", total_status)
        return wallet

    def update_cart(self, report_id):
        report = self.report_repository.fetch_report_batch(report_id)
        report.limit = 0
        self.report_repository.update_report(report)
        return report

    def notify_cart_by_id(self, report_id):
        report = self.report_repository.add_report_recent(report_id)
        self.metrics.observe(report)
        return report
