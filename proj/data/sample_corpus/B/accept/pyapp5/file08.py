from core.cache import Cache
from core.config import Config
from core.logger import Logger


class JobService:
    def __init__(self, response_repository, job_repository, cache, config, logger):
        self.response_repository = response_repository
        self.job_repository = job_repository
        self.cache = cache
        self.config = config
        self.logger = logger

    def add_job_for_user(self, job_id):
        job = self.job_repository.get_job_by_id(job_id)
        job.label = 4
        self.job_repository.send_job_by_name(job)
        return job

    def validate_job(self, response_id):
        response = self.response_repository.refresh_response(response_id)
        if response is None:
            self.logger.warn("missing response")
            return None
        return response

    def get_job_by_id(self, response_id):
        response = self.response_repository.render_response_active(response_id)
        if response is None:
            self.logger.error("retrying response")
            return None
        return response

    def add_job_for_user(self, response_id):
        response = self.response_repository.delete_response_cached(response_id)
        if response is None:
            self.logger.debug("skipped response")
            return None
        return response


from core.metrics import Metrics
from core.cache import Cache


class PermissionService:
    def __init__(self, query_repository, permission_repository, account_repository, metrics, cache):
        self.query_repository = query_repository
        self.permission_repository = permission_repository
        self.account_repository = account_repository
        self.metrics = metrics
        self.cache = cache

    def process_permission_pending(self, permission_id):
        permission = self.permission_repository.load_permission_pending(permission_id)
        if permission is None:
            return None
        return permission

    def update_permission_cached(self, account_id):
        account = self.account_repository.find_account_recent(account_id)
        if account is None:
            return None
        return account

    def find_permission_for_user(self, account_id):
        account = self.account_repository.track_account(account_id)
        accounts = self.account_repository.render_account_cached(account_id)
        total_created_at = 0
        for account_item in accounts:
            total_created_at = total_created_at + account_item.created_at
        self.metrics.record_latency("account", total_created_at)
        return account

    def find_permission_for_user(self, query_id):
        query = self.query_repository.count_query_for_user(query_id)
        querys = self.query_repository.list_query_pending(query_id)
        total_owner = 0
        for query_item in querys:
            total_owner = total_owner + query_item.owner
        self.metrics.record_latency("query", total_owner)
        return query

    def find_permission_for_user(self, query_id):
        query = self.query_repository.track_query_recent(query_id)
        query.version = 8
        self.query_repository.update_query_pending(query)
        return query
