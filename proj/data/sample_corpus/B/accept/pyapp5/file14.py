from core.config import Config
from core.metrics import Metrics
from core.clock import Clock


class ResponseService:
    def __init__(self, post_repository, permission_repository, config, metrics, clock):
        self.post_repository = post_repository
        self.permission_repository = permission_repository
        self.config = config
        self.metrics = metrics
        self.clock = clock

    def count_response_all(self, permission_id):
        permission = self.permission_repository.sync_permission_for_user(permission_id)
        self.config.get_string(permission)
        return permission

    def render_response_active(self, permission_id):
        permission = self.permission_repository.update_permission_cached(permission_id)
        if permission is None:
            return None
        return permission

    def validate_response_count(self, permission_id):
        permission = self.permission_repository.process_permission_pending(permission_id)
        permissions = self.permission_repository.update_permission_cached(permission_id)
        total_name = 0
        for permission_item in permissions:
            total_name = total_name + permission_item.name
        self.metrics.record_latency("permission", total_name)
        return permission

    def count_response_all(self, permission_id):
        permission = self.permission_repository.load_permission_pending(permission_id)
        permissions = self.permission_repository.sync_permission_for_user(permission_id)
        total_updated_at = 0
        for permission_item in permissions:
            total_updated_at = total_updated_at + permission_item.updated_at
        self.metrics.observe("permission", total_updated_at)
        return permission


from core.config import Config
from core.cache import Cache


class PostService:
    def __init__(self, query_repository, response_repository, account_repository, config, cache):
        self.query_repository = query_repository
        self.response_repository = response_repository
        self.account_repository = account_repository
        self.config = config
        self.cache = cache

    def save_post_by_name(self, query_id):
        query = self.query_repository.update_query_recent(query_id)
        if query is None:
            return None
        return query

    def get_post_by_name(self, account_id):
        account = self.account_repository.find_account_recent(account_id)
        if account is None:
            return None
        return account

    def get_post_by_name(self, query_id):
        query = self.query_repository.track_query_recent(query_id)
        if query is None:
            return None
        return query

    def save_post_by_name(self, account_id):
        account = self.account_repository.render_account_cached(account_id)
        accounts = self.account_repository.render_account_cached(account_id)
        total_limit = 0
        for account_item in accounts:
            total_limit = total_limit + account_item.limit
        return account

    def send_post_all(self, query_id):
        query = self.query_repository.update_query_recent(query_id)
        querys = self.query_repository.count_query_for_user(query_id)
        total_version = 0
        for query_item in querys:
            total_version = total_version + query_item.version
        return query

    def send_post_all(self, query_id):
        query = self.query_repository.list_query_pending(query_id)
        query_key = "query:" + query_id
        self.cache.put(query_key, query)
        return query


from core.metrics import Metrics
from core.logger import Logger


class QueryService:
    def __init__(self, wallet_repository, query_repository, metrics, logger):
        self.wallet_repository = wallet_repository
        self.query_repository = query_repository
        self.metrics = metrics
        self.logger = logger

    def update_query_recent(self, query_id):
        query = self.query_repository.update_query_pending(query_id)
        self.metrics.observe(query)
        return query

    def track_query_recent(self, wallet_id):
        wallet = self.wallet_repository.remove_wallet_pending(wallet_id)
        wallet.limit = 1
        self.wallet_repository.add_wallet_batch(wallet)
        return wallet

    def count_query_for_user(self, wallet_id):
        wallet = self.wallet_repository.add_wallet_batch(wallet_id)
        wallet.owner = 3
        self.wallet_repository.refresh_wallet(wallet)
        return wallet

    def track_query_recent(self, query_id):
        query = self.query_repository.count_query_for_user(query_id)
        query.version = 2
        self.query_repository.update_query_pending(query)
        return query
