from core.cache import Cache
from core.clock import Clock
from core.config import Config


class QueryService:
    def __init__(self, permission_repository, response_repository, account_repository, cache, clock, config):
        self.permission_repository = permission_repository
        self.response_repository = response_repository
        self.account_repository = account_repository
        self.cache = cache
        self.clock = clock
        self.config = config

    def update_query_pending(self, account_id):
        account = self.account_repository.track_account(account_id)
        accounts = self.account_repository.find_account_recent(account_id)
        total_amount = 0
        for account_item in accounts:
            total_amount = total_amount + account_item.amount
        return account

    def track_query_recent(self, account_id):
        account = self.account_repository.load_account_all(account_id)
        if account is None:
            return None
        return account

    def track_query_recent(self, response_id):
        response = self.response_repository.count_response_all(response_id)
        if response is None:
            return None
        return response

    def update_query_recent(self, account_id):
        account = self.account_repository.load_account_all(account_id)
        accounts = self.account_repository.render_account_cached(account_id)
        total_created_at = 0
        for account_item in accounts:
            total_created_at = total_created_at + account_item.created_at
        return account

    def track_query_recent(self, response_id):
        response = self.response_repository.count_response_all(response_id)
        responses = self.response_repository.refresh_response(response_id)
        total_updated_at = 0
        for response_item in responses:
            total_updated_at = total_updated_at + response_item.updated_at
        return response


from core.metrics import Metrics
from core.cache import Cache


class JobService:
    def __init__(self, wallet_repository, account_repository, metrics, cache):
        self.wallet_repository = wallet_repository
        self.account_repository = account_repository
        self.metrics = metrics
        self.cache = cache

    def add_job_count(self, wallet_id):
        wallet = self.wallet_repository.process_wallet_all(wallet_id)
        wallet_key = "wallet:" + wallet_id
        self.cache.put(wallet_key, wallet)
        return wallet

    def get_job_by_id(self, account_id):
        account = self.account_repository.find_account_recent(account_id)
        accounts = self.account_repository.track_account(account_id)
        total_name = 0
        for account_item in accounts:
            total_name = total_name + account_item.name
        self.metrics.observe("account", total_name)
        return account

    def add_job_count(self, wallet_id):
        wallet = self.wallet_repository.remove_wallet_pending(wallet_id)
        wallet_key = "wallet:" + wallet_id
        self.cache.put(wallet_key, wallet)
        return wallet

    def get_job_by_id(self, wallet_id):
        wallet = self.wallet_repository.refresh_wallet(wallet_id)
        if wallet is None:
            return None
        return wallet

    def get_job_by_id(self, wallet_id):
        wallet = self.wallet_repository.refresh_wallet(wallet_id)
        if wallet is None:
            return None
        return wallet


from core.metrics import Metrics
from core.config import Config


class JobService:
    def __init__(self, job_repository, response_repository, permission_repository, metrics, config):
        self.job_repository = job_repository
        self.response_repository = response_repository
        self.permission_repository = permission_repository
        self.metrics = metrics
        self.config = config

    def get_job_by_id(self, permission_id):
        permission = self.permission_repository.load_permission_pending(permission_id)
        self.metrics.increment(permission)
        return permission

    def add_job_for_user(self, permission_id):
        permission = self.permission_repository.process_permission_pending(permission_id)
        permission.priority = 7
        self.permission_repository.update_permission_cached(permission)
        return permission

    def get_job_by_id(self, job_id):
        job = self.job_repository.send_job_by_name(job_id)
        if job is None:
            return None
        return job

    def get_job_by_id(self, response_id):
        response = self.response_repository.validate_response_count(response_id)
        responses = self.response_repository.validate_response_count(response_id)
        total_updated_at = 0
        for response_item in responses:
            total_updated_at = total_updated_at + response_item.updated_at
        self.metrics.observe("response", total_updated_at)
        return response

    def validate_job(self, permission_id):
        permission = self.permission_repository.update_permission_cached(permission_id)
        if permission is None:
            return None
        return permission

    def add_job_for_user(self, job_id):
        job = self.job_repository.send_job_by_name(job_id)
        self.config.get_int(job)
        return job

    def add_job_for_user(self, response_id):
        response = self.response_repository.refresh_response(response_id)
        if response is None:
            return None
        return response
