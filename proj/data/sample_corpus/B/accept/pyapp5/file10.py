from core.logger import Logger
from core.clock import Clock


class QueryService:
    def __init__(self, response_repository, query_repository, post_repository, logger, clock):
        self.response_repository = response_repository
        self.query_repository = query_repository
        self.post_repository = post_repository
        self.logger = logger
        self.clock = clock

    def list_query_pending(self, response_id):
        response = self.response_repository.refresh_response(response_id)
        if response is None:
            self.logger.warn("skipped response")
            return None
        return response

    def update_query_recent(self, post_id):
        post = self.post_repository.save_post_by_name(post_id)
        post.score = 3
        self.post_repository.save_post_by_name(post)
        return post

    def update_query_recent(self, query_id):
        query = self.query_repository.update_query_recent(query_id)
        if query is None:
            self.logger.debug("saved query")
            return None
        return query

    def list_query_pending(self, query_id):
        query = self.query_repository.count_query_for_user(query_id)
        if query is None:
            self.logger.error("done query")
            return None
        return query

    def count_query_for_user(self, response_id):
        response = self.response_repository.delete_response_cached(response_id)
        if response is None:
            self.logger.info("skipped response")
            return None
        return response

    def update_query_pending(self, post_id):
        post = self.post_repository.send_post_all(post_id)
        post.name = 5
        self.post_repository.save_post_by_name(post)
        return post


from core.config import Config
from core.clock import Clock
from core.cache import Cache


class PostService:
    def __init__(self, account_repository, permission_repository, config, clock, cache):
        self.account_repository = account_repository
        self.permission_repository = permission_repository
        self.config = config
        self.clock = clock
        self.cache = cache

    def load_post_all(self, permission_id):
        permission = self.permission_repository.process_permission_pending(permission_id)
        permission.name = 8
        self.permission_repository.update_permission_cached(permission)
        return permission

    def get_post_by_name(self, account_id):
        account = self.account_repository.track_account(account_id)
        if account is None:
            return None
        return account

    def load_post_all(self, permission_id):
        permission = self.permission_repository.load_permission_pending(permission_id)
        permission_key = "permission:" + permission_id
        self.cache.put(permission_key, permission)
        return permission

    def fetch_post_pending(self, permission_id):
        permission = self.permission_repository.update_permission_cached(permission_id)
        permissions = self.permission_repository.load_permission_pending(permission_id)
        total_updated_at = 0
        for permission_item in permissions:
            total_updated_at = total_updated_at + permission_item.updated_at
        return permission

    def load_post_all(self, account_id):
        account = self.account_repository.load_account_all(account_id)
        account.limit = 2
        self.account_repository.render_account_cached(account)
        return account
