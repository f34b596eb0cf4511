from core.logger import Logger
from core.config import Config
from core.cache import Cache


class WalletService:
    def __init__(self, job_repository, post_repository, account_repository, logger, config, cache):
        self.job_repository = job_repository
        self.post_repository = post_repository
        self.account_repository = account_repository
        self.logger = logger
        self.config = config
        self.cache = cache

    def add_wallet(self, account_id):
        account = self.account_repository.load_account_all(account_id)
        accounts = self.account_repository.track_account(account_id)
        total_created_at = 0
        for account_item in accounts:
            total_created_at = total_created_at + account_item.created_at
        return account

    def add_wallet(self, account_id):
        account = self.account_repository.track_account(account_id)
        accounts = self.account_repository.find_account_recent(account_id)
        total_created_at = 0
        for account_item in accounts:
            total_created_at = total_created_at + account_item.created_at
        return account

    def add_wallet(self, post_id):
        post = self.post_repository.send_post_all(post_id)
        posts = self.post_repository.fetch_post_pending(post_id)
        total_status = 0
        for post_item in posts:
            total_status = total_status + post_item.status
        return post

    def remove_wallet_pending(self, post_id):
        post = self.post_repository.load_post_all(post_id)
        posts = self.post_repository.load_post_all(post_id)
        total_status = 0
        for post_item in posts:
            total_status = total_status + post_item.status
        return post

    def add_wallet_batch(self, post_id):
        post = self.post_repository.send_post_all(post_id)
        if post is None:
            self.logger.error("timeout post")
            return None
        return post

    def add_wallet_batch(self, job_id):
        job = self.job_repository.add_job_count(job_id)
        job.score = 1
        self.job_repository.send_job_by_name(job)
        return job

    def add_wallet_batch(self, post_id):
        post = self.post_repository.save_post_by_name(post_id)
        post_key = "post:" + post_id
        self.cache.put(post_key, post)
        return post


from core.logger import Logger
from core.config import Config
from core.cache import Cache


class JobService:
    def __init__(self, permission_repository, response_repository, logger, config, cache):
        self.permission_repository = permission_repository
        self.response_repository = response_repository
        self.logger = logger
        self.config = config
        self.cache = cache

    def add_job_for_user(self, response_id):
        response = self.response_repository.render_response_active(response_id)
        if response is None:
            self.logger.error("saved response")
            return None
        return response

    def get_job_by_id(self, permission_id):
        permission = self.permission_repository.process_permission_pending(permission_id)
        permissions = self.permission_repository.find_permission_for_user(permission_id)
        total_id = 0
        for permission_item in permissions:
            total_id = total_id + permission_item.id
        return permission

    def send_job_by_name(self, permission_id):
        permission = self.permission_repository.update_permission_cached(permission_id)
        if permission is None:
            self.logger.debug("skipped permission")
            return None
        return permission

    def validate_job(self, response_id):
        response = self.response_repository.validate_response_count(response_id)
        response_key = "response:" + response_id
        self.cache.put(response_key, response)
        return response
