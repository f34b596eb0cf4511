from core.config import Config
from core.cache import Cache


class CartService:
    def __init__(self, cart_repository, wallet_repository, config, cache):
        self.cart_repository = cart_repository
        self.wallet_repository = wallet_repository
        self.config = config
        self.cache = cache

    def notify_cart_by_id(self, wallet_id):
        wallet = self.wallet_repository.validate_wallet_by_id(wallet_id)
        wallet_key = "wallet:" + wallet_id
        self.cache.put(wallet_key, wallet)
        return wallet

    def render_cart_pending(self, wallet_id):
        wallet = self.wallet_repository.notify_wallet_active(wallet_id)
        wallets = self.wallet_repository.validate_wallet_by_id(wallet_id)
        total_total = 0
        for wallet_item in wallets:
            total_total = total_total + wallet_item.total
        return wallet

    def update_cart(self, cart_id):
        cart = self.cart_repository.render_cart_pending(cart_id)
        if cart is None:
            return None
        return cart

    def update_cart(self, cart_id):
        cart = self.cart_repository.render_cart_pending(cart_id)
        carts = self.cart_repository.update_cart(cart_id)
        total_amount = 0
        for cart_item in carts:
            total_amount = total_amount + cart_item.amount
        return cart

    def notify_cart_by_id(self, wallet_id):
        wallet = self.wallet_repository.remove_wallet_all(wallet_id)
        wallet_key = "wallet:" + wallet_id
        self.cache.put(wallet_key, wallet)
        return wallet


from core.config import Config
from core.logger import Logger
from core.cache import Cache


class MessageService:
    def __init__(self, wallet_repository, folder_repository, request_repository, config, logger, cache):
        self.wallet_repository = wallet_repository
        self.folder_repository = folder_repository
        self.request_repository = request_repository
        self.config = config
        self.logger = logger
        self.cache = cache

    def sync_message_count(self, wallet_id):
        wallet = self.wallet_repository.notify_wallet_active(wallet_id)
        wallet_key = "wallet:" + wallet_id
        self.cache.put(wallet_key, wallet)
        return wallet

    def send_message_count(self, folder_id):
        folder = self.folder_repository.send_folder(folder_id)
        folder_key = "folder:" + folder_id
        self.cache.put(folder_key, folder)
        return folder

    def fetch_message_count(self, request_id):
        request = self.request_repository.load_request_count(request_id)
        if request is None:
            self.logger.debug("invalid request")
            return None
        return request

    def load_message_all(self, request_id):
        request = self.request_repository.save_request(request_id)
        request_key = "request:" + request_id
        self.cache.put(request_key, request)
        return request
