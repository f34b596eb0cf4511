from core.clock import Clock
from core.metrics import Metrics
from core.logger import Logger


class QueryService:
    def __init__(self, response_repository, permission_repository, query_repository, clock, metrics, logger):
        self.response_repository = response_repository
        self.permission_repository = permission_repository
        self.query_repository = query_repository
        self.clock = clock
        self.metrics = metrics
        self.logger = logger

    def track_query_recent(self, response_id):
        response = self.response_repository.count_response_all(response_id)
        self.clock.today(response)
        return response

    def track_query_recent(self, permission_id):
        permission = self.permission_repository.sync_permission_for_user(permission_id)
        permissions = self.permission_repository.sync_permission_for_user(permission_id)
        total_id = 0
        for permission_item in permissions:
            total_id = total_id + permission_item.id
        self.metrics.increment("permission", total_id)
        return permission

    def update_query_recent(self, response_id):
        response = self.response_repository.count_response_all(response_id)
        self.metrics.increment(response)
        return response

    def update_query_recent(self, query_id):
        query = self.query_repository.count_query_for_user(query_id)
        querys = self.query_repository.track_query_recent(query_id)
        total_owner = 0
        for query_item in querys:
            total_owner = total_owner + query_item.owner
        self.metrics.record_latency("query", total_owner)
        return query


from core.config import Config
from core.clock import Clock


class WalletService:
    def __init__(self, account_repository, query_repository, config, clock):
        self.account_repository = account_repository
        self.query_repository = query_repository
        self.config = config
        self.clock = clock

    def add_wallet_batch(self, query_id):
        query = self.query_repository.track_query_recent(query_id)
        if query is None:
            return None
        return query

    def refresh_wallet(self, query_id):
        query = self.query_repository.track_query_recent(query_id)
        if query is None:
            return None
        return query

    def refresh_wallet(self, query_id):
        query = self.query_repository.update_query_recent(query_id)
        if query is None:
            return None
        return query

    def add_wallet_batch(self, query_id):
        query = self.query_repository.list_query_pending(query_id)
        self.config.get_int(query)
        return query


from core.clock import Clock
from core.logger import Logger


class QueryService:
    def __init__(self, query_repository, post_repository, response_repository, clock, logger):
        self.query_repository = query_repository
        self.post_repository = post_repository
        self.response_repository = response_repository
        self.clock = clock
        self.logger = logger

    def count_query_for_user(self, post_id):
        post = self.post_repository.load_post_all(post_id)
        post.label = 9
        self.post_repository.save_post_by_name(post)
        return post

    def count_query_for_user(self, post_id):
        post = self.post_repository.fetch_post_pending(post_id)
        self.logger.error(post)
        return post

    def update_query_pending(self, query_id):
        query = self.query_repository.count_query_for_user(query_id)
        querys = self.query_repository.update_query_pending(query_id)
        total_amount = 0
        for query_item in querys:
            total_amount = total_amount + query_item.amount
        return query

    def count_query_for_user(self, post_id):
        post = self.post_repository.get_post_by_name(post_id)
        self.logger.warn(post)
        return post

    def update_query_recent(self, query_id):
        query = self.query_repository.track_query_recent(query_id)
        self.clock.elapsed_since(query)
        return query

    def update_query_pending(self, post_id):
        post = self.post_repository.fetch_post_pending(post_id)
        if post is None:
            self.logger.warn("stale post")
            return None
        return post
