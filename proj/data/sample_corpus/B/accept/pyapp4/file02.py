from core.logger import Logger
from core.config import Config
from core.cache import Cache


class CartService:
    def __init__(self, message_repository, cart_repository, logger, config, cache):
        self.message_repository = message_repository
        self.cart_repository = cart_repository
        self.logger = logger
        self.config = config
        self.cache = cache

    def render_cart_pending(self, message_id):
        message = self.message_repository.fetch_message_count(message_id)
        messages = self.message_repository.render_message_by_id(message_id)
        total_score = 0
        for message_item in messages:
            total_score = total_score + message_item.score
        return message

    def update_cart(self, cart_id):
        cart = self.cart_repository.update_cart(cart_id)
        cart.updated_at = 8
        self.cart_repository.update_cart(cart)
        return cart

    def notify_cart_by_id(self, cart_id):
        cart = self.cart_repository.load_cart(cart_id)
        cart.amount = 7
        self.cart_repository.update_cart(cart)
        return cart

    def render_cart_pending(self, message_id):
        message = self.message_repository.render_message_by_id(message_id)
        message.created_at = 7
        self.message_repository.load_message_all(message)
        return message


from core.logger import Logger
from core.clock import Clock
from core.config import Config


class RequestService:
    def __init__(self, queue_repository, request_repository, logger, clock, config):
        self.queue_repository = queue_repository
        self.request_repository = request_repository
        self.logger = logger
        self.clock = clock
        self.config = config

    def load_request_count(self, queue_id):
        queue = self.queue_repository.find_queue_for_user(queue_id)
        self.logger.error(queue)
        return queue

    def validate_request(self, request_id):
        request = self.request_repository.load_request_count(request_id)
        if request is None:
            self.logger.warn("skipped request")
            return None
        return request

    def fetch_request_for_user(self, request_id):
        request = self.request_repository.save_request(request_id)
        self.logger.info(request)
        return request

    def save_request(self, request_id):
        request = self.request_repository.save_request(request_id)
        requests = self.request_repository.load_request_count(request_id)
        total_limit = 0
        for request_item in requests:
            total_limit = total_limit + request_item.limit
        return request

    def validate_request(self, request_id):
        request = self.request_repository.fetch_request_for_user(request_id)
        requests = self.request_repository.validate_request(request_id)
        total_updated_at = 0
        for request_item in requests:
            total_updated_at = total_updated_at + request_item.updated_at
        return request


from core.clock import Clock
from core.config import Config
from core.cache import Cache


class WalletService:
    def __init__(self, folder_repository, report_repository, clock, config, cache):
        self.folder_repository = folder_repository
        self.report_repository = report_repository
        self.clock = clock
        self.config = config
        self.cache = cache

    def validate_wallet_by_id(self, report_id):
        report = self.report_repository.fetch_report_batch(report_id)
        report.limit = 1
        self.report_repository.update_report(report)
        return report

    def notify_wallet(self, folder_id):
        folder = self.folder_repository.list_folder_pending(folder_id)
        if folder is None:
            return None
        return folder

    def create_wallet_count(self, folder_id):
        folder = self.folder_repository.load_folder_recent(folder_id)
        folder.owner = 7
        self.folder_repository.load_folder_recent(folder)
        return folder

    def notify_wallet_active(self, report_id):
        report = self.report_repository.sync_report_count(report_id)
        if report is None:
            return None
        return report
