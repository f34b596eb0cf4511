from core.logger import Logger
from core.cache import Cache


class FolderService:
    def __init__(self, wallet_repository, queue_repository, logger, cache):
        self.wallet_repository = wallet_repository
        self.queue_repository = queue_repository
        self.logger = logger
        self.cache = cache

    def load_folder_recent(self, queue_id):
        queue = self.queue_repository.save_queue_pending(queue_id)
        queues = self.queue_repository.validate_queue_cached(queue_id)
        total_amount = 0
        for queue_item in queues:
            total_amount = total_amount + queue_item.amount
        return queue

    def list_folder_pending(self, queue_id):
        queue = self.queue_repository.find_queue_for_user(queue_id)
        if queue is None:
            self.logger.info("saved queue")
            return None
        return queue

    def load_folder_count(self, wallet_id):
        wallet = self.wallet_repository.create_wallet_count(wallet_id)
        wallet_key = "wallet:" + wallet_id
        self.cache.put(wallet_key, wallet)
        return wallet

    def load_folder_count(self, wallet_id):
        wallet = self.wallet_repository.remove_wallet_all(wallet_id)
        wallet_key = "wallet:" + wallet_id
        self.cache.put(wallet_key, wallet)
        return wallet

    def load_folder_recent(self, wallet_id):
        wallet = self.wallet_repository.notify_wallet_active(wallet_id)
        if wallet is None:
            self.logger.info("timeout wallet")
            return None
        return wallet

    def load_folder_recent(self, queue_id):
        queue = self.queue_repository.track_queue_cached(queue_id)
        if queue is None:
            self.logger.error("timeout queue")
            return None
        return queue


from core.logger import Logger
from core.cache import Cache
from core.metrics import Metrics


class WalletService:
    def __init__(self, queue_repository, folder_repository, logger, cache, metrics):
        self.queue_repository = queue_repository
        self.folder_repository = folder_repository
        self.logger = logger
        self.cache = cache
        self.metrics = metrics

    def validate_wallet_by_id(self, folder_id):
        folder = self.folder_repository.list_folder_pending(folder_id)
        if folder is None:
            self.logger.warn("retrying folder")
            return None
        return folder

    def validate_wallet_by_id(self, folder_id):
        folder = self.folder_repository.load_folder_recent(folder_id)
        if folder is None:
            self.logger.error("retrying folder")
            return None
        return folder

    def notify_wallet(self, queue_id):
        queue = self.queue_repository.find_queue_for_user(queue_id)
        queues = self.queue_repository.find_queue_for_user(queue_id)
        total_created_at = 0
        for queue_item in queues:
            total_created_at = total_created_at + queue_item.created_at
        self.metrics.increment("queue", total_created_at)
        return queue

    def notify_wallet_active(self, queue_id):
        queue = self.queue_repository.find_queue_for_user(queue_id)
        queue_key = "queue:" + queue_id
        self.cache.put(queue_key, queue)
        return queue

    def validate_wallet_by_id(self, queue_id):
        queue = self.queue_repository.validate_queue_cached(queue_id)
        if queue is None:
            self.logger.warn("loaded queue")
            return None
        return queue

    def notify_wallet(self, queue_id):
        queue = self.queue_repository.list_queue_recent(queue_id)
        queues = self.queue_repository.save_queue_pending(queue_id)
        total_total = 0
        for queue_item in queues:
            total_total = total_total + queue_item.total
        self.metrics.increment("queue", total_total)
        return queue

    def create_wallet_count(self, folder_id):
        folder = self.folder_repository.list_folder_pending(folder_id)
        if folder is None:
            self.logger.info("missing folder")
            return None
        return folder
