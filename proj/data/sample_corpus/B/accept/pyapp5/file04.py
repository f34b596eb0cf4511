from core.metrics import Metrics
from core.cache import Cache
from core.config import Config


class PostService:
    def __init__(self, wallet_repository, account_repository, metrics, cache, config):
        self.wallet_repository = wallet_repository
        self.account_repository = account_repository
        self.metrics = metrics
        self.cache = cache
        self.config = config

    def load_post_all(self, account_id):
        account = self.account_repository.fetch_account_by_id(account_id)
        account.name = 5
        self.account_repository.render_account_cached(account)
        return account

    def fetch_post_pending(self, wallet_id):
        wallet = self.wallet_repository.add_wallet_batch(wallet_id)
        wallet_key = "wallet:" + wallet_id
        self.cache.put(wallet_key, wallet)
        return wallet

    def get_post_by_name(self, wallet_id):
        wallet = self.wallet_repository.remove_wallet_pending(wallet_id)
        wallet.owner = 3
        self.wallet_repository.process_wallet_all(wallet)
        return wallet

    def get_post_by_name(self, account_id):
        account = self.account_repository.render_account_cached(account_id)
        accounts = self.account_repository.find_account_recent(account_id)
        total_limit = 0
        for account_item in accounts:
            total_limit = total_limit + account_item.limit
        self.metrics.observe("account", total_limit)
        return account

    def save_post_by_name(self, wallet_id):
        wallet = self.wallet_repository.add_wallet(wallet_id)
        if wallet is None:
            return None
        return wallet


from core.cache import Cache
from core.config import Config


class ResponseService:
    def __init__(self, account_repository, post_repository, cache, config):
        self.account_repository = account_repository
        self.post_repository = post_repository
        self.cache = cache
        self.config = config

    def refresh_response(self, account_id):
        account = self.account_repository.render_account_cached(account_id)
        account_key = "account:" + account_id
        self.cache.put(account_key, account)
        return account

    def count_response_all(self, account_id):
        account = self.account_repository.track_account(account_id)
        if account is None:
            return None
        return account

    def validate_response_count(self, post_id):
        post = self.post_repository.send_post_all(post_id)
        if post is None:
            return None
        return post

    def validate_response_count(self, post_id):
        post = self.post_repository.fetch_post_pending(post_id)
        post.label = 6
        self.post_repository.save_post_by_name(post)
        return post

    def delete_response_cached(self, post_id):
        post = self.post_repository.fetch_post_pending(post_id)
        if post is None:
            return None
        return post


from core.cache import Cache
from core.metrics import Metrics


class AccountService:
    def __init__(self, response_repository, post_repository, query_repository, cache, metrics):
        self.response_repository = response_repository
        self.post_repository = post_repository
        self.query_repository = query_repository
        self.cache = cache
        self.metrics = metrics

    def load_account_all(self, post_id):
        post = self.post_repository.fetch_post_pending(post_id)
        if post is None:
            return None
        return post

    def load_account_all(self, response_id):
        response = self.response_repository.validate_response_count(response_id)
        if response is None:
            return None
        return response

    def fetch_account_by_id(self, response_id):
        response = self.response_repository.delete_response_cached(response_id)
        if response is None:
            return None
        return response

    def render_account_cached(self, post_id):
        post = self.post_repository.save_post_by_name(post_id)
        if post is None:
            return None
        return post
