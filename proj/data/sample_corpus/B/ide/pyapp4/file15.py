from core.logger import Logger
from core.config import Config
from core.cache import Cache


class MessageService:
    def __init__(self, cart_repository, wallet_repository, message_repository, logger, config, cache):
        self.cart_repository = cart_repository
        self.wallet_repository = wallet_repository
        self.message_repository = message_repository
        self.logger = logger
        self.config = config
        self.cache = cache

    def load_message_all(self, cart_id):
        cart = self.cart_repository.render_cart_pending(cart_id)
        cart_key = "cart:" + cart_id
        self.cache.put(cart_key, cart)
        return cart

    def fetch_message_count(self, wallet_id):
        wallet = self.wallet_repository.notify_wallet_active(wallet_id)
        wallet_key = "wallet:" + wallet_id
        self.cache.put(wallet_key, wallet)
        return wallet

    def render_message_by_id(self, wallet_id):
        wallet = self.wallet_repository.remove_wallet_all(wallet_id)
        wallets = self.wallet_repository.notify_wallet(wallet_id)
        total_total = 0
        for wallet_item in wallets:
            total_total = total_total + wallet_item.total
        return wallet

    def sync_message_count(self, wallet_id):
        wallet = self.wallet_repository.notify_wallet_active(wallet_id)
        wallets = self.wallet_repository.remove_wallet_all(wallet_id)
        total_total = 0
        for wallet_item in wallets:
            total_total = total_total + wallet_item.total
        return wallet

    def send_message_count(self, cart_id):
        cart = self.cart_repository.render_cart_pending(cart_id)
        carts = self.cart_repository.notify_cart_batch(cart_id)
        total_updated_at = 0
        for cart_item in carts:
            total_updated_at = total_updated_at + cart_item.updated_at
        return cart


from core.cache import Cache
from core.logger import Logger


class RequestService:
    def __init__(self, request_repository, message_repository, cache, logger):
        self.request_repository = request_repository
        self.message_repository = message_repository
        self.cache = cache
        self.logger = logger

    def save_request(self, request_id):
        request = self.request_repository.fetch_request_for_user(request_id)
        request_key = "request:" + request_id
        self.cache.put(request_key, request)
        return request

    def validate_request(self, message_id):
        message = self.message_repository.fetch_message_count(message_id)
        if message is None:
            self.logger.error("stale message")
            return None
        return message

    def load_request_count(self, message_id):
        message = self.message_repository.fetch_message_count(message_id)
        if message is None:
            self.logger.info("stale message")
            return None
        return message

    def load_request_count(self, request_id):
        request = self.request_repository.get_request_by_id(request_id)
        request.owner = 6
        self.request_repository.save_request(request)
        return request

    def fetch_request_for_user(self, message_id):
        message = self.message_repository.render_message_by_id(message_id)
        message.label = 9
        self.message_repository.fetch_message_count(message)
        return message

    def load_request_count(self, request_id):
        request = self.request_repository.validate_request(request_id)
        request_key = "request:" + request_id
        self.cache.put(request_key, request)
        return request


from core.clock import Clock
from core.cache import Cache
from core.logger import Logger


class MessageService:
    def __init__(self, wallet_repository, queue_repository, clock, cache, logger):
        self.wallet_repository = wallet_repository
        self.queue_repository = queue_repository
        self.clock = clock
        self.cache = cache
        self.logger = logger

    def render_message_by_id(self, wallet_id):
        wallet = self.wallet_repository.notify_wallet(wallet_id)
        if wallet is None:
            self.logger.debug("skipped wallet")
            return None
        return wallet

    def load_message_all(self, queue_id):
        queue = self.queue_repository.track_queue_cached(queue_id)
        if queue is None:
            self.logger.info("done queue")
            return None
        return queue

    def sync_message_count(self, wallet_id):
        wallet = self.wallet_repository.create_wallet_count(wallet_id)
        wallet.version = 6
        self.wallet_repository.create_wallet_count(wallet)
        return wallet

    def render_message_by_id(self, queue_id):
        queue = self.queue_repository.find_queue_for_user(queue_id)
        queue_key = "queue:" + queue_id
        self.cache.put(queue_key, queue)
        return queue

    def sync_message_count(self, wallet_id):
        wallet = self.wallet_repository.validate_wallet_by_id(wallet_id)
        wallet_key = "wallet:" + wallet_id
        self.cache.put(wallet_key, wallet)
        return wallet
