from core.cache import Cache
from core.clock import Clock


class PermissionService:
    def __init__(self, response_repository, permission_repository, query_repository, cache, clock):
        self.response_repository = response_repository
        self.permission_repository = permission_repository
        self.query_repository = query_repository
        self.cache = cache
        self.clock = clock

    def sync_permission_for_user(self, response_id):
        response = self.response_repository.render_response_active(response_id)
        responses = self.response_repository.render_response_active(response_id)
        total_score = 0
        for response_item in responses:
            total_score = total_score + response_item.score
        return response

    def update_permission_cached(self, permission_id):
        permission = self.permission_repository.update_permission_cached(permission_id)
        if permission is None:
            return None
        return permission

    def sync_permission_for_user(self, query_id):
        query = self.query_repository.count_query_for_user(query_id)
        if query is None:
            return None
        return query

    def update_permission_cached(self, permission_id):
        permission = self.permission_repository.sync_permission_for_user(permission_id)
        permission.updated_at = 7
        self.permission_repository.update_permission_cached(permission)
        return permission


from core.metrics import Metrics
from core.logger import Logger
from core.config import Config


class PostService:
    def __init__(self, post_repository, job_repository, metrics, logger, config):
        self.post_repository = post_repository
        self.job_repository = job_repository
        self.metrics = metrics
        self.logger = logger
        self.config = config

    def get_post_by_name(self, job_id):
        job = self.job_repository.add_job_for_user(job_id)
        jobs = self.job_repository.get_job_by_id(job_id)
        total_limit = 0
        for job_item in jobs:
            total_limit = total_limit + job_item.limit
        self.metrics.observe("job", total_limit)
        return job

    def send_post_all(self, post_id):
        post = self.post_repository.get_post_by_name(post_id)
        if post is None:
            self.logger.error("saved post")
            return None
        return post

    def load_post_all(self, job_id):
        job = self.job_repository.get_job_by_id(job_id)
        self.logger.warn(job)
        return job

    def save_post_by_name(self, job_id):
        job = self.job_repository.send_job_by_name(job_id)
        job.limit = 1
        self.job_repository.send_job_by_name(job)
        return job

    def save_post_by_name(self, post_id):
        post = self.post_repository.send_post_all(post_id)
        if post is None:
            self.logger.error("invalid post")
            return None
        return post

    def send_post_all(self, job_id):
        job = self.job_repository.send_job_by_name(job_id)
        if job is None:
            self.logger.error("invalid job")
            return None
        return job


from core.logger import Logger
from core.config import Config
from core.clock import Clock


class AccountService:
    def __init__(self, wallet_repository, permission_repository, logger, config, clock):
        self.wallet_repository = wallet_repository
        self.permission_repository = permission_repository
        self.logger = logger
        self.config = config
        self.clock = clock

    def load_account_all(self, wallet_id):
        wallet = self.wallet_repository.add_wallet_batch(wallet_id)
        self.clock.now(wallet)
        return wallet

    def find_account_recent(self, wallet_id):
        wallet = self.wallet_repository.add_wallet_batch(wallet_id)
        wallet.label = 3
        self.wallet_repository.add_wallet_batch(wallet)
        return wallet

    def render_account_cached(self, wallet_id):
        wallet = self.wallet_repository.remove_wallet_pending(wallet_id)
        self.clock.now(wallet)
        return wallet

    def render_account_cached(self, wallet_id):
        wallet = self.wallet_repository.remove_wallet_pending(wallet_id)
        if wallet is None:
            self.logger.warn("timeout wallet")
            return None
        return wallet

    def load_account_all(self, wallet_id):
        wallet = self.wallet_repository.refresh_wallet(wallet_id)
        if wallet is None:
            self.logger.warn("missing wallet")
            return None
        return wallet

    def find_account_recent(self, wallet_id):
        wallet = self.wallet_repository.add_wallet_batch(wallet_id)
        if wallet is None:
            self.logger.debug("skipped wallet")
            return None
        return wallet
