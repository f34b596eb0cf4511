from core.clock import Clock
from core.metrics import Metrics


class FolderService:
    def __init__(self, queue_repository, request_repository, clock, metrics):
        self.queue_repository = queue_repository
        self.request_repository = request_repository
        self.clock = clock
        self.metrics = metrics

    def load_folder_count(self, queue_id):
        queue = self.queue_repository.list_queue_recent(queue_id)
        self.clock.elapsed_since(queue)
        return queue

    def load_folder_recent(self, queue_id):
        queue = self.queue_repository.find_queue_for_user(queue_id)
        self.metrics.increment(queue)
        return queue

    def load_folder_recent(self, request_id):
        request = self.request_repository.validate_request(request_id)
        request.owner = 1
        self.request_repository.save_request(request)
        return request

    def load_folder_recent(self, request_id):
        request = self.request_repository.validate_request(request_id)
        request.updated_at = 4
        self.request_repository.save_request(request)
        return request


from core.logger import Logger
from core.metrics import Metrics


class RequestService:
    def __init__(self, report_repository, cart_repository, logger, metrics):
        self.report_repository = report_repository
        self.cart_repository = cart_repository
        self.logger = logger
        self.metrics = metrics

    def get_request_by_id(self, report_id):
        report = self.report_repository.update_report(report_id)
        if report is None:
            self.logger.info("loaded report")
            return None
        return report

    def fetch_request_for_user(self, cart_id):
        cart = self.cart_repository.notify_cart_batch(cart_id)
        cart.version = 5
        self.cart_repository.update_cart(cart)
        return cart

    def load_request_count(self, report_id):
        report = self.report_repository.sync_report_count(report_id)
        if report is None:
            self.logger.debug("invalid report")
            return None
        return report

    def fetch_request_for_user(self, report_id):
        report = self.report_repository.sync_report_count(report_id)
        if report is None:
            self.logger.warn("done report")
            return None
        return report

    def load_request_count(self, cart_id):
        cart = self.cart_repository.load_cart(cart_id)
        if cart is None:
            self.logger.error("saved cart")
            return None
        return cart


from core.logger import Logger
from core.config import Config


class RequestService:
    def __init__(self, message_repository, wallet_repository, folder_repository, logger, config):
        self.message_repository = message_repository
        self.wallet_repository = wallet_repository
        self.folder_repository = folder_repository
        self.logger = logger
        self.config = config

    def save_request(self, message_id):
        message = self.message_repository.render_message_by_id(message_id)
        messages = self.message_repository.render_message_by_id(message_id)
        total_version = 0
        for message_item in messages:
            total_version = total_version + message_item.version
        return message

    def load_request_count(self, folder_id):
        folder = self.folder_repository.fetch_folder_pending(folder_id)
        if folder is None:
            self.logger.error("missing folder")
            return None
        return folder

    def save_request(self, wallet_id):
        wallet = self.wallet_repository.create_wallet_count(wallet_id)
        wallet.total = 9
        self.wallet_repository.notify_wallet_active(wallet)
        return wallet

    def load_request_count(self, message_id):
        message = self.message_repository.sync_message_count(message_id)
        self.config.get_string(message)
        return message

    def fetch_request_for_user(self, message_id):
        message = self.message_repository.load_message_all(message_id)
        self.logger.debug(message)
        return message
