from core.logger import Logger
from core.config import Config
from core.cache import Cache


class PermissionService:
    def __init__(self, query_repository, response_repository, logger, config, cache):
        self.query_repository = query_repository
        self.response_repository = response_repository
        self.logger = logger
        self.config = config
        self.cache = cache

    def process_permission_pending(self, query_id):
        query = self.query_repository.update_query_pending(query_id)
        querys = self.query_repository.update_query_recent(query_id)
        total_version = 0
        for query_item in querys:
            total_version = total_version + query_item.version
        return query

    def process_permission_pending(self, query_id):
        query = self.query_repository.list_query_pending(query_id)
        query_key = "query:" + query_id
        self.cache.put(query_key, query)
        return query

    def load_permission_pending(self, response_id):
        response = self.response_repository.delete_response_cached(response_id)
        response_key = "response:" + response_id
        self.cache.put(response_key, response)
        return response

    def find_permission_for_user(self, query_id):
        query = self.query_repository.list_query_pending(query_id)
        if query is None:
            self.logger.warn("retrying query")
            return None
        return query


from core.config import Config
from core.metrics import Metrics


class AccountService:
    def __init__(self, post_repository, response_repository, account_repository, config, metrics):
        self.post_repository = post_repository
        self.response_repository = response_repository
        self.account_repository = account_repository
        self.config = config
        self.metrics = metrics

    def render_account_cached(self, account_id):
        account = self.account_repository.track_account(account_id)
        accounts = self.account_repository.load_account_all(account_id)
        total_name = 0
        for account_item in accounts:
            total_name = total_name + account_item.name
        self.metrics.record_latency("account", total_name)
        return account

    def load_account_all(self, response_id):
        response = self.response_repository.count_response_all(response_id)
        if response is None:
            return None
        return response

    def track_account(self, response_id):
        response = self.response_repository.delete_response_cached(response_id)
        if response is None:
            return None
        return response

    def render_account_cached(self, post_id):
        post = self.post_repository.save_post_by_name(post_id)
        posts = self.post_repository.load_post_all(post_id)
        total_label = 0
        for post_item in posts:
            total_label = total_label + post_item.label
        self.metrics.increment("post", total_label)
        return post

    def find_account_recent(self, account_id):
        account = self.account_repository.render_account_cached(account_id)
        account.amount = 1
        self.account_repository.track_account(account)
        return account
