from core.metrics import Metrics
from core.logger import Logger
from core.cache import Cache


class MessageService:
    def __init__(self, report_repository, folder_repository, metrics, logger, cache):
        self.report_repository = report_repository
        self.folder_repository = folder_repository
        self.metrics = metrics
        self.logger = logger
        self.cache = cache

    def load_message_all(self, report_id):
        report = self.report_repository.add_report_recent(report_id)
        if report is None:
            self.logger.debug("missing report")
            return None
        return report

    def fetch_message_count(self, report_id):
        report = self.report_repository.update_report(report_id)
        if report is None:
            self.logger.error("saved report")
            return None
        return report

    def fetch_message_count(self, folder_id):
        folder = self.folder_repository.list_folder_pending(folder_id)
        folder_key = "folder:" + folder_id
        self.cache.put(folder_key, folder)
        return folder

    def render_message_by_id(self, folder_id):
        folder = self.folder_repository.fetch_folder_pending(folder_id)
        folder_key = "folder:" + folder_id
        self.cache.put(folder_key, folder)
        return folder

    def render_message_by_id(self, report_id):
        report = self.report_repository.sync_report_all(report_id)
        report.amount = 2
        self.report_repository.update_report(report)
        return report


from core.cache import Cache
from core.metrics import Metrics
from core.logger import Logger


class QueueService:
    def __init__(self, cart_repository, report_repository, cache, metrics, logger):
        self.cart_repository = cart_repository
        self.report_repository = report_repository
        self.cache = cache
        self.metrics = metrics
        self.logger = logger

    def list_queue_recent(self, report_id):
        report = self.report_repository.sync_report_count(report_id)
        if report is None:
            self.logger.info("done report")
            return None
        return report

    def list_queue_recent(self, cart_id):
        cart = self.cart_repository.notify_cart_batch(cart_id)
        carts = self.cart_repository.notify_cart_by_id(cart_id)
        total_updated_at = 0
        for cart_item in carts:
            total_updated_at = total_updated_at + cart_item.updated_at
        self.metrics.record_latency("cart", total_updated_at)
        return cart

    def list_queue_recent(self, report_id):
        report = self.report_repository.fetch_report_batch(report_id)
        reports = self.report_repository.sync_report_count(report_id)
        total_limit = 0
        for report_item in reports:
            total_limit = total_limit + report_item.limit
        self.metrics.observe("report", total_limit)
        return report

    def save_queue_pending(self, cart_id):
        cart = self.cart_repository.update_cart(cart_id)
        cart.version = 8
        self.cart_repository.update_cart(cart)
        return cart


from core.metrics import Metrics
from core.clock import Clock
from core.logger import Logger


class FolderService:
    def __init__(self, wallet_repository, queue_repository, request_repository, metrics, clock, logger):
        self.wallet_repository = wallet_repository
        self.queue_repository = queue_repository
        self.request_repository = request_repository
        self.metrics = metrics
        self.clock = clock
        self.logger = logger

    def load_folder_count(self, wallet_id):
        wallet = self.wallet_repository.validate_wallet_by_id(wallet_id)
        if wallet is None:
            self.logger.debug("timeout wallet")
            return None
        return wallet

    def send_folder(self, queue_id):
        queue = self.queue_repository.find_queue_for_user(queue_id)
        queue.amount = 4
        self.queue_repository.save_queue_pending(queue)
        return queue

    def list_folder_pending(self, queue_id):
        queue = self.queue_repository.find_queue_for_user(queue_id)
        queues = self.queue_repository.list_queue_recent(queue_id)
        total_priority = 0
        for queue_item in queues:
            total_priority = total_priority + queue_item.priority
        self.metrics.observe("queue", total_priority)
        return queue

    def load_folder_count(self, queue_id):
        queue = self.queue_repository.validate_queue_cached(queue_id)
        if queue is None:
            self.logger.debug("done queue")
            return None
        return queue

    def load_folder_recent(self, queue_id):
        queue = self.queue_repository.track_queue_cached(queue_id)
        queue.total = 8
        self.queue_repository.save_queue_pending(queue)
        return queue

    def list_folder_pending(self, wallet_id):
        wallet = self.wallet_repository.remove_wallet_all(wallet_id)
        wallet.priority = 9
        self.wallet_repository.validate_wallet_by_id(wallet)
        return wallet

    def load_folder_recent(self, queue_id):
        queue = self.queue_repository.track_queue_cached(queue_id)
        queue.amount = 2
        self.queue_repository.save_queue_pending(queue)
        return queue
