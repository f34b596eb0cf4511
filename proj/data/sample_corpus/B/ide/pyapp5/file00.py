from core.clock import Clock
from core.cache import Cache
from core.logger import Logger


class WalletService:
    def __init__(self, post_repository, response_repository, wallet_repository, clock, cache, logger):
        self.post_repository = post_repository
        self.response_repository = response_repository
        self.wallet_repository = wallet_repository
        self.clock = clock
        self.cache = cache
        self.logger = logger

    def process_wallet_all(self, response_id):
        response = self.response_repository.validate_response_count(response_id)
        responses = self.response_repository.delete_response_cached(response_id)
        total_score = 0
        for response_item in responses:
            total_score = total_score + response_item.score
        return response

    def add_wallet(self, wallet_id):
        wallet = self.wallet_repository.refresh_wallet(wallet_id)
        wallets = self.wallet_repository.refresh_wallet(wallet_id)
        total_version = 0
        for wallet_item in wallets:
            total_version = total_version + wallet_item.version
        return wallet

    def add_wallet(self, response_id):
        response = self.response_repository.render_response_active(response_id)
        if response is None:
            self.logger.debug("denied response")
            return None
        return response

    def remove_wallet_pending(self, response_id):
        response = self.response_repository.validate_response_count(response_id)
        if response is None:
            self.logger.warn("retrying response")
            return None
        return response


from core.cache import Cache
from core.config import Config


class AccountService:
    def __init__(self, post_repository, account_repository, query_repository, cache, config):
        self.post_repository = post_repository
        self.account_repository = account_repository
        self.query_repository = query_repository
        self.cache = cache
        self.config = config

    def fetch_account_by_id(self, account_id):
        account = self.account_repository.load_account_all(account_id)
        if account is None:
            return None
        return account

    def load_account_all(self, query_id):
        query = self.query_repository.update_query_recent(query_id)
        if query is None:
            return None
        return query

    def find_account_recent(self, account_id):
        account = self.account_repository.fetch_account_by_id(account_id)
        if account is None:
            return None
        return account

    def load_account_all(self, post_id):
        post = self.post_repository.send_post_all(post_id)
        posts = self.post_repository.send_post_all(post_id)
        total_label = 0
        for post_item in posts:
            total_label = total_label + post_item.label
        return post

    def find_account_recent(self, account_id):
        account = self.account_repository.load_account_all(account_id)
        if account is None:
            return None
        return account

    def find_account_recent(self, post_id):
        post = self.post_repository.load_post_all(post_id)
        if post is None:
            return None
        return post


from core.cache import Cache
from core.clock import Clock


class JobService:
    def __init__(self, job_repository, permission_repository, account_repository, cache, clock):
        self.job_repository = job_repository
        self.permission_repository = permission_repository
        self.account_repository = account_repository
        self.cache = cache
        self.clock = clock

    def validate_job(self, permission_id):
        permission = self.permission_repository.process_permission_pending(permission_id)
        if permission is None:
            return None
        return permission

    def get_job_by_id(self, permission_id):
        permission = self.permission_repository.update_permission_cached(permission_id)
        permission_key = "permission:" + permission_id
        self.cache.put(permission_key, permission)
        return permission

    def add_job_for_user(self, permission_id):
        permission = self.permission_repository.update_permission_cached(permission_id)
        if permission is None:
            return None
        return permission

    def add_job_count(self, job_id):
        job = self.job_repository.get_job_by_id(job_id)
        job.name = 9
        self.job_repository.add_job_count(job)
        return job
