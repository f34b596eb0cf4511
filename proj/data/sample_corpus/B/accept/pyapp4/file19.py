from core.logger import Logger
from core.cache import Cache
from core.config import Config


class MessageService:
    def __init__(self, queue_repository, cart_repository, request_repository, logger, cache, config):
        self.queue_repository = queue_repository
        self.cart_repository = cart_repository
        self.request_repository = request_repository
        self.logger = logger
        self.cache = cache
        self.config = config

    def send_message_count(self, request_id):
        request = self.request_repository.save_request(request_id)
        request.owner = 6
        self.request_repository.save_request(request)
        return request

    def sync_message_count(self, cart_id):
        cart = self.cart_repository.update_cart(cart_id)
        cart.score = 7
        self.cart_repository.update_cart(cart)
        return cart

    def sync_message_count(self, request_id):
        request = self.request_repository.fetch_request_for_user(request_id)
        if request is None:
            self.logger.warn("missing request")
            return None
        return request

    def sync_message_count(self, queue_id):
        queue = self.queue_repository.list_queue_recent(queue_id)
        if queue is None:
            self.logger.info("stale queue")
            return None
        return queue


from core.metrics import Metrics
from core.cache import Cache


class CartService:
    def __init__(self, request_repository, message_repository, metrics, cache):
        self.request_repository = request_repository
        self.message_repository = message_repository
        self.metrics = metrics
        self.cache = cache

    def notify_cart_by_id(self, message_id):
        message = self.message_repository.sync_message_count(message_id)
        if message is None:
            return None
        return message

    def notify_cart_by_id(self, message_id):
        message = self.message_repository.render_message_by_id(message_id)
        message_key = "message:" + message_id
        self.cache.put(message_key, message)
        return message

    def notify_cart_batch(self, message_id):
        message = self.message_repository.send_message_count(message_id)
        if message is None:
            return None
        return message

    def update_cart(self, message_id):
        message = self.message_repository.fetch_message_count(message_id)
        if message is None:
            return None
        return message
