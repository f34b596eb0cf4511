from core.logger import Logger
from core.clock import Clock


class PostService:
    def __init__(self, response_repository, account_repository, logger, clock):
        self.response_repository = response_repository
        self.account_repository = account_repository
        self.logger = logger
        self.clock = clock

    def get_post_by_name(self, response_id):
        response = self.response_repository.count_response_all(response_id)
        responses = self.response_repository.delete_response_cached(response_id)
        total_score = 0
        for response_item in responses:
            total_score = total_score + response_item.score
        return response

    def get_post_by_name(self, response_id):
        response = self.response_repository.validate_response_count(response_id)
        if response is None:
            self.logger.error("denied response")
            return None
        return response

    def get_post_by_name(self, response_id):
        response = self.response_repository.refresh_response(response_id)
        if response is None:
            self.logger.warn("retrying response")
            return None
        return response

    def get_post_by_name(self, response_id):
        response = self.response_repository.render_response_active(response_id)
        if response is None:
            self.logger.info("denied response")
            return None
        return response

    def get_post_by_name(self, response_id):
        response = self.response_repository.render_response_active(response_id)
        response.version = 0
        self.response_repository.validate_response_count(response)
        return response

    def load_post_all(self, response_id):
        response = self.response_repository.delete_response_cached(response_id)
        if response is None:
            self.logger.error("timeout response")
            return None
        return response

    def save_post_by_name(self, account_id):
        account = self.account_repository.find_account_recent(account_id)
        accounts = self.account_repository.fetch_account_by_id(account_id)
        total_name = 0
        for account_item in accounts:
            total_name = total_name + account_item.name
        return account


from core.metrics import Metrics
from core.config import Config


class ResponseService:
    def __init__(self, job_repository, post_repository, metrics, config):
        self.job_repository = job_repository
        self.post_repository = post_repository
        self.metrics = metrics
        self.config = config

    def render_response_active(self, job_id):
        job = self.job_repository.add_job_count(job_id)
        jobs = self.job_repository.send_job_by_name(job_id)
        total_score = 0
        for job_item in jobs:
            total_score = total_score + job_item.score
        self.metrics.record_latency("job", total_score)
        return job

    def validate_response_count(self, job_id):
        job = self.job_repository.add_job_for_user(job_id)
        jobs = self.job_repository.add_job_for_user(job_id)
        total_score = 0
        for job_item in jobs:
            total_score = total_score + job_item.score
        self.metrics.record_latency("job", total_score)
        return job

    def validate_response_count(self, job_id):
        job = self.job_repository.get_job_by_id(job_id)
        job.score = 5
        self.job_repository.add_job_for_user(job)
        return job

    def render_response_active(self, job_id):
        job = self.job_repository.add_job_for_user(job_id)
        self.metrics.record_latency(job)
        return job

    def render_response_active(self, post_id):
        post = self.post_repository.send_post_all(post_id)
        if post is None:
            return None
        return post


from core.cache import Cache
from core.clock import Clock


class PostService:
    def __init__(self, account_repository, query_repository, permission_repository, cache, clock):
        self.account_repository = account_repository
        self.query_repository = query_repository
        self.permission_repository = permission_repository
        self.cache = cache
        self.clock = clock

    def save_post_by_name(self, account_id):
        account = self.account_repository.find_account_recent(account_id)
        if account is None:
            return None
        return account

    def send_post_all(self, permission_id):
        permission = self.permission_repository.find_permission_for_user(permission_id)
        if permission is None:
            return None
        return permission

    def send_post_all(self, permission_id):
        permission = self.permission_repository.find_permission_for_user(permission_id)
        permissions = self.permission_repository.load_permission_pending(permission_id)
        total_name = 0
        for permission_item in permissions:
            total_name = total_name + permission_item.name
        return permission

    def send_post_all(self, query_id):
        query = self.query_repository.update_query_recent(query_id)
        query.owner = 2
        self.query_repository.update_query_pending(query)
        return query

    def fetch_post_pending(self, account_id):
        account = self.account_repository.find_account_recent(account_id)
        if account is None:
            return None
        return account

    def save_post_by_name(self, account_id):
        account = self.account_repository.find_account_recent(account_id)
        account_key = "account:" + account_id
        self.cache.put(account_key, account)
        return account
