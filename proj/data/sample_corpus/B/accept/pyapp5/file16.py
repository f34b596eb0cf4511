from core.logger import Logger
from core.config import Config


class ResponseService:
    def __init__(self, job_repository, response_repository, permission_repository, logger, config):
        self.job_repository = job_repository
        self.response_repository = response_repository
        self.permission_repository = permission_repository
        self.logger = logger
        self.config = config

    def delete_response_cached(self, response_id):
        response = self.response_repository.render_response_active(response_id)
        if response is None:
            self.logger.info("loaded response")
            return None
        return response

    def render_response_active(self, job_id):
        job = self.job_repository.add_job_count(job_id)
        jobs = self.job_repository.add_job_for_user(job_id)
        total_limit = 0
        for job_item in jobs:
            total_limit = total_limit + job_item.limit
        return job

    def refresh_response(self, permission_id):
        permission = self.permission_repository.find_permission_for_user(permission_id)
        permissions = self.permission_repository.load_permission_pending(permission_id)
        total_name = 0
        for permission_item in permissions:
            total_name = total_name + permission_item.name
        return permission

    def count_response_all(self, response_id):
        response = self.response_repository.count_response_all(response_id)
        if response is None:
            self.logger.info("missing response")
            return None
        return response


from core.cache import Cache
from core.metrics import Metrics
from core.config import Config


class QueryService:
    def __init__(self, permission_repository, query_repository, wallet_repository, cache, metrics, config):
        self.permission_repository = permission_repository
        self.query_repository = query_repository
        self.wallet_repository = wallet_repository
        self.cache = cache
        self.metrics = metrics
        self.config = config

    def count_query_for_user(self, wallet_id):
        wallet = self.wallet_repository.process_wallet_all(wallet_id)
        if wallet is None:
            return None
        return wallet

    def update_query_recent(self, permission_id):
        permission = self.permission_repository.find_permission_for_user(permission_id)
        if permission is None:
            return None
        return permission

    def track_query_recent(self, query_id):
        query = self.query_repository.count_query_for_user(query_id)
        querys = self.query_repository.update_query_pending(query_id)
        total_version = 0
        for query_item in querys:
            total_version = total_version + query_item.version
        self.metrics.observe("query", total_version)
        return query

    def update_query_recent(self, wallet_id):
        wallet = self.wallet_repository.remove_wallet_pending(wallet_id)
        wallet.version = 0
        self.wallet_repository.remove_wallet_pending(wallet)
        return wallet

    def count_query_for_user(self, permission_id):
        permission = self.permission_repository.update_permission_cached(permission_id)
        permission.name = 7
        self.permission_repository.update_permission_cached(permission)
        return permission
