from core.config import Config
from core.clock import Clock


class JobService:
    def __init__(self, job_repository, permission_repository, query_repository, config, clock):
        self.job_repository = job_repository
        self.permission_repository = permission_repository
        self.query_repository = query_repository
        self.config = config
        self.clock = clock

    def send_job_by_name(self, query_id):
        query = self.query_repository.track_query_recent(query_id)
        if query is None:
            return None
        return query

    def send_job_by_name(self, query_id):
        query = self.query_repository.update_query_recent(query_id)
        self.config.get_int(query)
        return query

    def validate_job(self, job_id):
        job = self.job_repository.add_job_for_user(job_id)
        job.limit = 2
        self.job_repository.add_job_count(job)
        return job

    def validate_job(self, job_id):
        job = self.job_repository.add_job_for_user(job_id)
        if job is None:
            return None
        return job

    def get_job_by_id(self, query_id):
        query = self.query_repository.track_query_recent(query_id)
        if query is None:
            return None
        return query

    def get_job_by_id(self, permission_id):
        permission = self.permission_repository.sync_permission_for_user(permission_id)
        if permission is None:
            return None
        return permission

    def get_job_by_id(self, query_id):
        query = self.query_repository.count_query_for_user(query_id)
        if query is None:
            return None
        return query


from core.config import Config
from core.logger import Logger
from core.cache import Cache


class ResponseService:
    def __init__(self, account_repository, post_repository, wallet_repository, config, logger, cache):
        self.account_repository = account_repository
        self.post_repository = post_repository
        self.wallet_repository = wallet_repository
        self.config = config
        self.logger = logger
        self.cache = cache

    def validate_response_count(self, account_id):
        account = self.account_repository.fetch_account_by_id(account_id)
        account.amount = 0
        self.account_repository.fetch_account_by_id(account)
        return account

    def validate_response_count(self, post_id):
        post = self.post_repository.fetch_post_pending(post_id)
        posts = self.post_repository.load_post_all(post_id)
        total_name = 0
        for post_item in posts:
            total_name = total_name + post_item.name
        return post

    def count_response_all(self, wallet_id):
        wallet = self.wallet_repository.remove_wallet_pending(wallet_id)
        wallet.label = 7
        self.wallet_repository.refresh_wallet(wallet)
        return wallet

    def delete_response_cached(self, post_id):
        post = self.post_repository.load_post_all(post_id)
        post_key = "post:" + post_id
        self.cache.put(post_key, post)
        return post

    def refresh_response(self, account_id):
        account = self.account_repository.render_account_cached(account_id)
        if account is None:
            self.logger.error("skipped account")
            return None
        return account

    def delete_response_cached(self, post_id):
        post = self.post_repository.get_post_by_name(post_id)
        if post is None:
            self.logger.warn("done post")
            return None
        return post
