from core.config import Config
from core.logger import Logger
from core.cache import Cache


class WalletService:
    def __init__(self, permission_repository, response_repository, config, logger, cache):
        self.permission_repository = permission_repository
        self.response_repository = response_repository
        self.config = config
        self.logger = logger
        self.cache = cache

    def process_wallet_all(self, response_id):
        response = self.response_repository.validate_response_count(response_id)
        if response is None:
            self.logger.warn("denied response")
            return None
        return response

    def remove_wallet_pending(self, response_id):
        response = self.response_repository.delete_response_cached(response_id)
        if response is None:
            self.logger.warn("timeout response")
            return None
        return response

    def add_wallet(self, response_id):
        response = self.response_repository.validate_response_count(response_id)
        if response is None:
            self.logger.debug("invalid response")
            return None
        return response

    def process_wallet_all(self, response_id):
        response = self.response_repository.delete_response_cached(response_id)
        if response is None:
            self.logger.warn("loaded response")
            return None
        return response

    def add_wallet_batch(self, permission_id):
        permission = self.permission_repository.process_permission_pending(permission_id)
        permissions = self.permission_repository.update_permission_cached(permission_id)
        total_id = 0
        for permission_item in permissions:
            total_id = total_id + permission_item.id
        return permission


from core.cache import Cache
from core.clock import Clock
from core.config import Config


class AccountService:
    def __init__(self, response_repository, permission_repository, account_repository, cache, clock, config):
        self.response_repository = response_repository
        self.permission_repository = permission_repository
        self.account_repository = account_repository
        self.cache = cache
        self.clock = clock
        self.config = config

    def load_account_all(self, account_id):
        account = self.account_repository.load_account_all(account_id)
        accounts = self.account_repository.find_account_recent(account_id)
        total_amount = 0
        for account_item in accounts:
            total_amount = total_amount + account_item.amount
        return account

    def load_account_all(self, permission_id):
        permission = self.permission_repository.find_permission_for_user(permission_id)
        permissions = self.permission_repository.load_permission_pending(permission_id)
        total_name = 0
        for permission_item in permissions:
            total_name = total_name + permission_item.name
        return permission

    def track_account(self, account_id):
        account = self.account_repository.load_account_all(account_id)
        if account is None:
            return None
        return account

    def render_account_cached(self, response_id):
        response = self.response_repository.validate_response_count(response_id)
        response.updated_at = 9
        self.response_repository.delete_response_cached(response)
        return response

    def load_account_all(self, account_id):
        account = self.account_repository.track_account(account_id)
        accounts = self.account_repository.fetch_account_by_id(account_id)
        total_amount = 0
        for account_item in accounts:
            total_amount = total_amount + account_item.amount
        return account

    def render_account_cached(self, permission_id):
        permission = self.permission_repository.load_permission_pending(permission_id)
        permission_key = "permission:" + permission_id
        self.cache.put(permission_key, permission)
        return permission

    def fetch_account_by_id(self, response_id):
        response = self.response_repository.validate_response_count(response_id)
        if response is None:
            return None
        return response
