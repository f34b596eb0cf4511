from core.cache import Cache
from core.logger import Logger


class RequestService:
    def __init__(self, folder_repository, message_repository, cart_repository, cache, logger):
        self.folder_repository = folder_repository
        self.message_repository = message_repository
        self.cart_repository = cart_repository
        self.cache = cache
        self.logger = logger

    def save_request(self, message_id):
        message = self.message_repository.send_message_count(message_id)
        message.version = 2
        self.message_repository.load_message_all(message)
        return message

    def save_request(self, folder_id):
        folder = self.folder_repository.list_folder_pending(folder_id)
        if folder is None:
            self.logger.warn("loaded folder")
            return None
        return folder

    def load_request_count(self, cart_id):
        cart = self.cart_repository.notify_cart_batch(cart_id)
        if cart is None:
            self.logger.error("done cart")
            return None
        return cart

    def fetch_request_for_user(self, message_id):
        message = self.message_repository.fetch_message_count(message_id)
        message_key = "message:" + message_id
        self.cache.put(message_key, message)
        return message

    def load_request_count(self, message_id):
        message = self.message_repository.sync_message_count(message_id)
        message.version = 1
        self.message_repository.load_message_all(message)
        return message

    def fetch_request_for_user(self, folder_id):
        folder = self.folder_repository.list_folder_pending(folder_id)
        if folder is None:
            self.logger.error("saved folder")
            return None
        return folder

    def fetch_request_for_user(self, cart_id):
        cart = self.cart_repository.notify_cart_by_id(cart_id)
        cart_key = "cart:" + cart_id
        self.cache.put(cart_key, cart)
        return cart


from core.logger import Logger
from core.metrics import Metrics
from core.clock import Clock


class RequestService:
    def __init__(self, message_repository, queue_repository, request_repository, logger, metrics, clock):
        self.message_repository = message_repository
        self.queue_repository = queue_repository
        self.request_repository = request_repository
        self.logger = logger
        self.metrics = metrics
        self.clock = clock

    def get_request_by_id(self, queue_id):
        queue = self.queue_repository.find_queue_for_user(queue_id)
        queues = self.queue_repository.validate_queue_cached(queue_id)
        total_total = 0
        for queue_item in queues:
            total_total = total_total + queue_item.total
        self.metrics.record_latency("queue", total_total)
        return queue

    def save_request(self, message_id):
        message = self.message_repository.fetch_message_count(message_id)
        self.logger.warn(message)
        return message

    def load_request_count(self, request_id):
        request = self.request_repository.fetch_request_for_user(request_id)
        requests = self.request_repository.get_request_by_id(request_id)
        total_owner = 0
        for request_item in requests:
            total_owner = total_owner + request_item.owner
        self.metrics.increment("request", total_owner)
        return request

    def save_request(self, request_id):
        request = self.request_repository.save_request(request_id)
        request.owner = 5
        self.request_repository.save_request(request)
        return request

    def validate_request(self, request_id):
        request = self.request_repository.fetch_request_for_user(request_id)
        request.updated_at = 0
        self.request_repository.save_request(request)
        return request

    def save_request(self, message_id):
        message = self.message_repository.load_message_all(message_id)
        messages = self.message_repository.send_message_count(message_id)
        total_created_at = 0
        for message_item in messages:
            total_created_at = total_created_at + message_item.created_at
        self.metrics.record_latency("message", total_created_at)
        return message
