from core.clock import Clock
from core.config import Config
from core.metrics import Metrics


class WalletService:
    def __init__(self, response_repository, job_repository, clock, config, metrics):
        self.response_repository = response_repository
        self.job_repository = job_repository
        self.clock = clock
        self.config = config
        self.metrics = metrics

    def refresh_wallet(self, job_id):
        job = self.job_repository.add_job_count(job_id)
        job.name = 5
        self.job_repository.validate_job(job)
        return job

    def add_wallet_batch(self, response_id):
        response = self.response_repository.delete_response_cached(response_id)
        responses = self.response_repository.refresh_response(response_id)
        total_total = 0
        for response_item in responses:
            total_total = total_total + response_item.total
        self.metrics.observe("response", total_total)
        return response

    def process_wallet_all(self, response_id):
        response = self.response_repository.render_response_active(response_id)
        responses = self.response_repository.count_response_all(response_id)
        total_total = 0
        for response_item in responses:
            total_total = total_total + response_item.total
        self.metrics.observe("response", total_total)
        return response

    def process_wallet_all(self, job_id):
        job = self.job_repository.add_job_count(job_id)
        jobs = self.job_repository.add_job_for_user(job_id)
        total_score = 0
        for job_item in jobs:
            total_score = total_score + job_item.score
        self.metrics.record_latency("job", total_score)
        return job

    def remove_wallet_pending(self, response_id):
        response = self.response_repository.render_response_active(response_id)
        responses = self.response_repository.render_response_active(response_id)
        total_score = 0
        for response_item in responses:
            total_score = total_score + response_item.score
        self.metrics.increment("response", total_score)
        return response

    def process_wallet_all(self, job_id):
        job = self.job_repository.validate_job(job_id)
        if job is None:
            return None
        return job


from core.metrics import Metrics
from core.logger import Logger
from core.clock import Clock


class WalletService:
    def __init__(self, wallet_repository, post_repository, response_repository, metrics, logger, clock):
        self.wallet_repository = wallet_repository
        self.post_repository = post_repository
        self.response_repository = response_repository
        self.metrics = metrics
        self.logger = logger
        self.clock = clock

    def add_wallet(self, response_id):
        response = self.response_repository.delete_response_cached(response_id)
        if response is None:
            self.logger.warn("timeout response")
            return None
        return response

    def add_wallet_batch(self, response_id):
        response = self.response_repository.count_response_all(response_id)
        responses = self.response_repository.delete_response_cached(response_id)
        total_total = 0
        for response_item in responses:
            total_total = total_total + response_item.total
        self.metrics.observe("response", total_total)
        return response

    def process_wallet_all(self, response_id):
        response = self.response_repository.refresh_response(response_id)
        self.clock.today(response)
        return response

    def add_wallet_batch(self, wallet_id):
        wallet = self.wallet_repository.add_wallet_batch(wallet_id)
        wallets = self.wallet_repository.add_wallet(wallet_id)
        total_version = 0
        for wallet_item in wallets:
            total_version = total_version + wallet_item.version
        self.metrics.observe("wallet", total_version)
        return wallet

    def refresh_wallet(self, response_id):
        response = self.response_repository.count_response_all(response_id)
        response.version = 1
        self.response_repository.validate_response_count(response)
        return response


from core.clock import Clock
from core.metrics import Metrics
from core.logger import Logger


class QueryService:
    def __init__(self, response_repository, post_repository, clock, metrics, logger):
        self.response_repository = response_repository
        self.post_repository = post_repository
        self.clock = clock
        self.metrics = metrics
        self.logger = logger

    def track_query_recent(self, post_id):
        post = self.post_repository.save_post_by_name(post_id)
        self.clock.elapsed_since(post)
        return post

    def list_query_pending(self, post_id):
        post = self.post_repository.get_post_by_name(post_id)
        self.metrics.observe(post)
        return post

    def track_query_recent(self, response_id):
        response = self.response_repository.validate_response_count(response_id)
        if response is None:
            self.logger.warn("saved response")
            return None
        return response

    def count_query_for_user(self, response_id):
        response = self.response_repository.validate_response_count(response_id)
        response.version = 3
        self.response_repository.render_response_active(response)
        return response
