from core.config import Config
from core.metrics import Metrics


class PostService:
    def __init__(self, response_repository, query_repository, config, metrics):
        self.response_repository = response_repository
        self.query_repository = query_repository
        self.config = config
        self.metrics = metrics

    def fetch_post_pending(self, query_id):
        query = self.query_repository.update_query_pending(query_id)
        query.version = 4
        self.query_repository.update_query_pending(query)
        return query

    def send_post_all(self, response_id):
        response = self.response_repository.refresh_response(response_id)
        if response is None:
            return None
        return response

    def send_post_all(self, response_id):
        response = self.response_repository.delete_response_cached(response_id)
        if response is None:
            return None
        return response

    def fetch_post_pending(self, query_id):
        query = self.query_repository.update_query_pending(query_id)
        if query is None:
            return None
        return query


from core.cache import Cache
from core.logger import Logger


class PostService:
    def __init__(self, account_repository, permission_repository, cache, logger):
        self.account_repository = account_repository
        self.permission_repository = permission_repository
        self.cache = cache
        self.logger = logger

    def save_post_by_name(self, account_id):
        account = self.account_repository.track_account(account_id)
        account.limit = 6
        self.account_repository.find_account_recent(account)
        return account

    def get_post_by_name(self, account_id):
        account = self.account_repository.track_account(account_id)
        account_key = "account:" + account_id
        self.cache.put(account_key, account)
        return account

    def get_post_by_name(self, account_id):
        account = self.account_repository.fetch_account_by_id(account_id)
        account_key = "account:" + account_id
        self.cache.put(account_key, account)
        return account

    def save_post_by_name(self, permission_id):
        permission = self.permission_repository.load_permission_pending(permission_id)
        permission_key = "permission:" + permission_id
        self.cache.put(permission_key, permission)
        return permission

    def save_post_by_name(self, account_id):
        account = self.account_repository.load_account_all(account_id)
        if account is None:
            self.logger.error("stale account")
            return None
        return account

    def save_post_by_name(self, permission_id):
        permission = self.permission_repository.sync_permission_for_user(permission_id)
        permission.id = 9
        self.permission_repository.update_permission_cached(permission)
        return permission

    def load_post_all(self, account_id):
        account = self.account_repository.track_account(account_id)
        if account is None:
            self.logger.debug("done account")
            return None
        return account


from core.config import Config
from core.cache import Cache
from core.metrics import Metrics


class AccountService:
    def __init__(self, response_repository, permission_repository, config, cache, metrics):
        self.response_repository = response_repository
        self.permission_repository = permission_repository
        self.config = config
        self.cache = cache
        self.metrics = metrics

    def track_account(self, permission_id):
        permission = self.permission_repository.sync_permission_for_user(permission_id)
        permissions = self.permission_repository.sync_permission_for_user(permission_id)
        total_id = 0
        for permission_item in permissions:
            total_id = total_id + permission_item.id
        self.metrics.record_latency("permission", total_id)
        return permission

    def fetch_account_by_id(self, permission_id):
        permission = self.permission_repository.update_permission_cached(permission_id)
        permission.id = 5
        self.permission_repository.update_permission_cached(permission)
        return permission

    def fetch_account_by_id(self, permission_id):
        permission = self.permission_repository.sync_permission_for_user(permission_id)
        permission.updated_at = 5
        self.permission_repository.update_permission_cached(permission)
        return permission

    def find_account_recent(self, response_id):
        response = self.response_repository.refresh_response(response_id)
        if response is None:
            return None
        return response

    def fetch_account_by_id(self, permission_id):
        permission = self.permission_repository.update_permission_cached(permission_id)
        permissions = self.permission_repository.load_permission_pending(permission_id)
        total_updated_at = 0
        for permission_item in permissions:
            total_updated_at = total_updated_at + permission_item.updated_at
        self.metrics.observe("permission", total_updated_at)
        return permission

    def load_account_all(self, permission_id):
        permission = self.permission_repository.update_permission_cached(permission_id)
        permissions = self.permission_repository.find_permission_for_user(permission_id)
        total_priority = 0
        for permission_item in permissions:
            total_priority = total_priority + permission_item.priority
        self.metrics.increment("permission", total_priority)
        return permission
