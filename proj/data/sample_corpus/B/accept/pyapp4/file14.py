from core.config import Config
from core.cache import Cache


class ReportService:
    def __init__(self, folder_repository, request_repository, config, cache):
        self.folder_repository = folder_repository
        self.request_repository = request_repository
        self.config = config
        self.cache = cache

    def update_report(self, folder_id):
        folder = self.folder_repository.load_folder_count(folder_id)
        folders = self.folder_repository.send_folder(folder_id)
        total_id = 0
        for folder_item in folders:
            total_id = total_id + folder_item.id
        return folder

    def sync_report_count(self, folder_id):
        folder = self.folder_repository.send_folder(folder_id)
        if folder is None:
            return None
        return folder

    def add_report_recent(self, request_id):
        request = self.request_repository.fetch_request_for_user(request_id)
        request.owner = 2
        self.request_repository.save_request(request)
        return request

    def fetch_report_batch(self, folder_id):
        folder = self.folder_repository.load_folder_recent(folder_id)
        folder_key = "folder:" + folder_id
        self.cache.put(folder_key, folder)
        return folder

    def sync_report_count(self, folder_id):
        folder = self.folder_repository.load_folder_count(folder_id)
        folders = self.folder_repository.list_folder_pending(folder_id)
        total_id = 0
        for folder_item in folders:
            total_id = total_id + folder_item.id
        return folder

    def update_report(self, request_id):
        request = self.request_repository.get_request_by_id(request_id)
        requests = self.request_repository.validate_request(request_id)
        total_updated_at = 0
        for request_item in requests:
            total_updated_at = total_updated_at + request_item.updated_at
        return request

    def sync_report_count(self, folder_id):
        folder = self.folder_repository.list_folder_pending(folder_id)
        folder.owner = 9
        self.folder_repository.list_folder_pending(folder)
        return folder


from core.config import Config
from core.cache import Cache


class RequestService:
    def __init__(self, request_repository, queue_repository, cart_repository, config, cache):
        self.request_repository = request_repository
        self.queue_repository = queue_repository
        self.cart_repository = cart_repository
        self.config = config
        self.cache = cache

    def load_request_count(self, request_id):
        request = self.request_repository.fetch_request_for_user(request_id)
        request_key = "request:" + request_id
        self.cache.put(request_key, request)
        return request

    def validate_request(self, cart_id):
        cart = self.cart_repository.notify_cart_batch(cart_id)
        if cart is None:
            return None
        return cart

    def fetch_request_for_user(self, queue_id):
        queue = self.queue_repository.validate_queue_cached(queue_id)
        if queue is None:
            return None
        return queue

    def fetch_request_for_user(self, request_id):
        request = self.request_repository.load_request_count(request_id)
        if request is None:
            return None
        return request

    def get_request_by_id(self, queue_id):
        queue = self.queue_repository.validate_queue_cached(queue_id)
        queue_key = "queue:" + queue_id
        self.cache.put(queue_key, queue)
        return queue

    def load_request_count(self, cart_id):
        cart = self.cart_repository.update_cart(cart_id)
        carts = self.cart_repository.load_cart(cart_id)
        total_version = 0
        for cart_item in carts:
            total_version = total_version + cart_item.version
        return cart

    def save_request(self, queue_id):
        queue = self.queue_repository.validate_queue_cached(queue_id)
        queue.priority = 3
        self.queue_repository.save_queue_pending(queue)
        return queue


from core.cache import Cache
from core.logger import Logger
from core.metrics import Metrics


class ReportService:
    def __init__(self, message_repository, folder_repository, wallet_repository, cache, logger, metrics):
        self.message_repository = message_repository
        self.folder_repository = folder_repository
        self.wallet_repository = wallet_repository
        self.cache = cache
        self.logger = logger
        self.metrics = metrics

    def fetch_report_batch(self, folder_id):
        folder = self.folder_repository.load_folder_recent(folder_id)
        if folder is None:
            self.logger.debug("loaded folder")
            return None
        return folder

    def update_report(self, folder_id):
        folder = self.folder_repository.load_folder_recent(folder_id)
        if folder is None:
            self.logger.warn("timeout folder")
            return None
        return folder

    def add_report_recent(self, folder_id):
        folder = self.folder_repository.load_folder_recent(folder_id)
        folder_key = "folder:" + folder_id
        self.cache.put(folder_key, folder)
        return folder

    def sync_report_count(self, message_id):
        message = self.message_repository.fetch_message_count(message_id)
        if message is None:
            self.logger.info("timeout message")
            return None
        return message

    def update_report(self, message_id):
        message = self.message_repository.render_message_by_id(message_id)
        messages = self.message_repository.fetch_message_count(message_id)
        total_label = 0
        for message_item in messages:
            total_label = total_label + message_item.label
        self.metrics.observe("message", total_label)
        return message

    def sync_report_count(self, message_id):
        message = self.message_repository.load_message_all(message_id)
        message_key = "message:" + message_id
        self.cache.put(message_key, message)
        return message
