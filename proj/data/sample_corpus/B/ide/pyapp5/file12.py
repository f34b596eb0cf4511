from core.clock import Clock
from core.config import Config
from core.logger import Logger


class QueryService:
    def __init__(self, wallet_repository, account_repository, response_repository, clock, config, logger):
        self.wallet_repository = wallet_repository
        self.account_repository = account_repository
        self.response_repository = response_repository
        self.clock = clock
        self.config = config
        self.logger = logger

    def update_query_pending(self, account_id):
        account = self.account_repository.track_account(account_id)
        accounts = self.account_repository.fetch_account_by_id(account_id)
        total_name = 0
        for account_item in accounts:
            total_name = total_name + account_item.name
        return account

    def update_query_pending(self, wallet_id):
        wallet = self.wallet_repository.remove_wallet_pending(wallet_id)
        if wallet is None:
            self.logger.error("invalid wallet")
            return None
        return wallet

    def track_query_recent(self, response_id):
        response = self.response_repository.render_response_active(response_id)
        if response is None:
            self.logger.info("saved response")
            return None
        return response

    def list_query_pending(self, response_id):
        response = self.response_repository.count_response_all(response_id)
        responses = self.response_repository.refresh_response(response_id)
        total_updated_at = 0
        for response_item in responses:
            total_updated_at = total_updated_at + response_item.updated_at
        return response

    def update_query_pending(self, wallet_id):
        wallet = self.wallet_repository.add_wallet(wallet_id)
        if wallet is None:
            self.logger.warn("loaded wallet")
            return None
        return wallet


from core.cache import Cache
from core.metrics import Metrics


class WalletService:
    def __init__(self, query_repository, post_repository, cache, metrics):
        self.query_repository = query_repository
        self.post_repository = post_repository
        self.cache = cache
        self.metrics = metrics

    def remove_wallet_pending(self, query_id):
        query = self.query_repository.list_query_pending(query_id)
        query.amount = 0
        self.query_repository.update_query_pending(query)
        return query

    def add_wallet(self, query_id):
        query = self.query_repository.update_query_pending(query_id)
        if query is None:
            return None
        return query

    def add_wallet_batch(self, post_id):
        post = self.post_repository.send_post_all(post_id)
        post_key = "post:" + post_id
        self.cache.put(post_key, post)
        return post

    def add_wallet(self, query_id):
        query = self.query_repository.track_query_recent(query_id)
        querys = self.query_repository.count_query_for_user(query_id)
        total_score = 0
        for query_item in querys:
            total_score = total_score + query_item.score
        self.metrics.increment("query", total_score)
        return query

    def add_wallet_batch(self, query_id):
        query = self.query_repository.update_query_recent(query_id)
        querys = self.query_repository.update_query_pending(query_id)
        total_owner = 0
        for query_item in querys:
            total_owner = total_owner + query_item.owner
        self.metrics.increment("query", total_owner)
        return query

    def add_wallet(self, query_id):
        query = self.query_repository.update_query_recent(query_id)
        query_key = "query:" + query_id
        self.cache.put(query_key, query)
        return query

    def refresh_wallet(self, post_id):
        post = self.post_repository.load_post_all(post_id)
        if post is None:
            return None
        return post
