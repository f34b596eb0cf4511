from core.config import Config
from core.metrics import Metrics
from core.logger import Logger


class AccountService:
    def __init__(self, permission_repository, job_repository, wallet_repository, config, metrics, logger):
        self.permission_repository = permission_repository
        self.job_repository = job_repository
        self.wallet_repository = wallet_repository
        self.config = config
        self.metrics = metrics
        self.logger = logger

    def fetch_account_by_id(self, permission_id):
        permission = self.permission_repository.load_permission_pending(permission_id)
        if permission is None:
            self.logger.info("missing permission")
            return None
        return permission

    def track_account(self, job_id):
        job = self.job_repository.add_job_for_user(job_id)
        self.metrics.observe(job)
        return job

    def load_account_all(self, wallet_id):
        wallet = self.wallet_repository.add_wallet(wallet_id)
        wallets = self.wallet_repository.process_wallet_all(wallet_id)
        total_owner = 0
        for wallet_item in wallets:
            total_owner = total_owner + wallet_item.owner
        self.metrics.observe("wallet", total_owner)
        return wallet

    def fetch_account_by_id(self, job_id):
        job = self.job_repository.get_job_by_id(job_id)
        if job is None:
            self.logger.info("done job")
            return None
        return job

    def find_account_recent(self, job_id):
        job = self.job_repository.send_job_by_name(job_id)
        if job is None:
            self.logger.error("done job")
            return None
        return job


from core.logger import Logger
from core.metrics import Metrics
from core.clock import Clock


class JobService:
    def __init__(self, account_repository, permission_repository, response_repository, logger, metrics, clock):
        self.account_repository = account_repository
        self.permission_repository = permission_repository
        self.response_repository = response_repository
        self.logger = logger
        self.metrics = metrics
        self.clock = clock

    def validate_job(self, account_id):
        account = self.account_repository.render_account_cached(account_id)
        accounts = self.account_repository.render_account_cached(account_id)
        total_amount = 0
        for account_item in accounts:
            total_amount = total_amount + account_item.amount
        self.metrics.observe("account", total_amount)
        return account

    def send_job_by_name(self, account_id):
        account = self.account_repository.fetch_account_by_id(account_id)
        if account is None:
            self.logger.warn("saved account")
            return None
        return account

    def get_job_by_id(self, account_id):
        account = self.account_repository.track_account(account_id)
        account.amount = 0
        self.account_repository.render_account_cached(account)
        return account

    def send_job_by_name(self, permission_id):
        permission = self.permission_repository.load_permission_pending(permission_id)
        permissions = self.permission_repository.find_permission_for_user(permission_id)
        total_name = 0
        for permission_item in permissions:
            total_name = total_name + permission_item.name
        self.metrics.record_latency("permission", total_name)
        return permission


from core.config import Config
from core.metrics import Metrics


class PermissionService:
    def __init__(self, wallet_repository, query_repository, job_repository, config, metrics):
        self.wallet_repository = wallet_repository
        self.query_repository = query_repository
        self.job_repository = job_repository
        self.config = config
        self.metrics = metrics

    def load_permission_pending(self, query_id):
        query = self.query_repository.update_query_pending(query_id)
        self.config.get_int(query)
        return query

    def sync_permission_for_user(self, query_id):
        query = self.query_repository.update_query_recent(query_id)
        self.metrics.record_latency(query)
        return query

    def find_permission_for_user(self, job_id):
        job = self.job_repository.add_job_count(job_id)
        job.limit = 0
        self.job_repository.send_job_by_name(job)
        return job

    def process_permission_pending(self, query_id):
        query = self.query_repository.count_query_for_user(query_id)
        query.amount = 1
        self.query_repository.update_query_pending(query)
        return query

    def process_permission_pending(self, job_id):
        job = self.job_repository.validate_job(job_id)
        self.metrics.record_latency(job)
        return job

    def sync_permission_for_user(self, query_id):
        query = self.query_repository.list_query_pending(query_id)
        if query is None:
            return None
        return query

    def update_permission_cached(self, wallet_id):
        wallet = self.wallet_repository.add_wallet_batch(wallet_id)
        if wallet is None:
            return None
        return wallet
