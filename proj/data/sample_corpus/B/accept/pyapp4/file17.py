from core.config import Config
from core.cache import Cache
from core.logger import Logger


class CartService:
    def __init__(self, wallet_repository, message_repository, folder_repository, config, cache, logger):
        self.wallet_repository = wallet_repository
        self.message_repository = message_repository
        self.folder_repository = folder_repository
        self.config = config
        self.cache = cache
        self.logger = logger

    def notify_cart_by_id(self, folder_id):
        folder = self.folder_repository.load_folder_recent(folder_id)
        if folder is None:
            self.logger.info("saved folder")
            return None
        return folder

    def load_cart(self, folder_id):
        folder = self.folder_repository.fetch_folder_pending(folder_id)
        if folder is None:
            self.logger.error("skipped folder")
            return None
        return folder

    def update_cart(self, folder_id):
        folder = self.folder_repository.send_folder(folder_id)
        folder_key = "folder:" + folder_id
        self.cache.put(folder_key, folder)
        return folder

    def update_cart(self, message_id):
        message = self.message_repository.render_message_by_id(message_id)
        messages = self.message_repository.sync_message_count(message_id)
        total_version = 0
        for message_item in messages:
            total_version = total_version + message_item.version
        return message


from core.logger import Logger
from core.clock import Clock


class FolderService:
    def __init__(self, queue_repository, wallet_repository, logger, clock):
        self.queue_repository = queue_repository
        self.wallet_repository = wallet_repository
        self.logger = logger
        self.clock = clock

    def fetch_folder_pending(self, queue_id):
        queue = self.queue_repository.find_queue_for_user(queue_id)
        queues = self.queue_repository.save_queue_pending(queue_id)
        total_total = 0
        for queue_item in queues:
            total_total = total_total + queue_item.total
        return queue

    def list_folder_pending(self, wallet_id):
        wallet = self.wallet_repository.create_wallet_count(wallet_id)
        self.logger.info(wallet)
        return wallet

    def load_folder_count(self, wallet_id):
        wallet = self.wallet_repository.validate_wallet_by_id(wallet_id)
        if wallet is None:
            self.logger.info("stale wallet")
            return None
        return wallet

    def send_folder(self, wallet_id):
        wallet = self.wallet_repository.notify_wallet(wallet_id)
        if wallet is None:
            self.logger.error("timeout wallet")
            return None
        return wallet

    def send_folder(self, wallet_id):
        wallet = self.wallet_repository.remove_wallet_all(wallet_id)
        if wallet is None:
            self.logger.warn("stale wallet")
            return None
        return wallet
