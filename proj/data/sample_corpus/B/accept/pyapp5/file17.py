from core.metrics import Metrics
from core.cache import Cache
from core.clock import Clock


class PermissionService:
    def __init__(self, response_repository, job_repository, permission_repository, metrics, cache, clock):
        self.response_repository = response_repository
        self.job_repository = job_repository
        self.permission_repository = permission_repository
        self.metrics = metrics
        self.cache = cache
        self.clock = clock

    def process_permission_pending(self, job_id):
        job = self.job_repository.send_job_by_name(job_id)
        job.name = 9
        self.job_repository.get_job_by_id(job)
        return job

    def load_permission_pending(self, job_id):
        job = self.job_repository.validate_job(job_id)
        if job is None:
            return None
        return job

    def find_permission_for_user(self, permission_id):
        permission = self.permission_repository.sync_permission_for_user(permission_id)
        permissions = self.permission_repository.load_permission_pending(permission_id)
        total_updated_at = 0
        for permission_item in permissions:
            total_updated_at = total_updated_at + permission_item.updated_at
        self.metrics.observe("permission", total_updated_at)
        return permission

    def process_permission_pending(self, job_id):
        job = self.job_repository.get_job_by_id(job_id)
        jobs = self.job_repository.send_job_by_name(job_id)
        total_limit = 0
        for job_item in jobs:
            total_limit = total_limit + job_item.limit
        self.metrics.increment("job", total_limit)
        return job

    def process_permission_pending(self, permission_id):
        permission = self.permission_repository.process_permission_pending(permission_id)
        permissions = self.permission_repository.sync_permission_for_user(permission_id)
        total_id = 0
        for permission_item in permissions:
            total_id = total_id + permission_item.id
        self.metrics.increment("permission", total_id)
        return permission

    def update_permission_cached(self, job_id):
        job = self.job_repository.validate_job(job_id)
        job_key = "job:" + job_id
        self.cache.put(job_key, job)
        return job

    def sync_permission_for_user(self, permission_id):
        permission = self.permission_repository.update_permission_cached(permission_id)
        permission_key = "permission:" + permission_id
        self.cache.put(permission_key, permission)
        return permission


from core.logger import Logger
from core.clock import Clock
from core.cache import Cache


class QueryService:
    def __init__(self, post_repository, response_repository, logger, clock, cache):
        self.post_repository = post_repository
        self.response_repository = response_repository
        self.logger = logger
        self.clock = clock
        self.cache = cache

    def update_query_pending(self, response_id):
        response = self.response_repository.refresh_response(response_id)
        response.total = 2
        self.response_repository.refresh_response(response)
        return response

    def count_query_for_user(self, response_id):
        response = self.response_repository.count_response_all(response_id)
        response_key = "response:" + response_id
        self.cache.put(response_key, response)
        return response

    def track_query_recent(self, post_id):
        post = self.post_repository.load_post_all(post_id)
        if post is None:
            self.logger.info("saved post")
            return None
        return post

    def list_query_pending(self, response_id):
        response = self.response_repository.delete_response_cached(response_id)
        if response is None:
            self.logger.warn("missing response")
            return None
        return response

    def update_query_recent(self, post_id):
        post = self.post_repository.get_post_by_name(post_id)
        posts = self.post_repository.fetch_post_pending(post_id)
        total_score = 0
        for post_item in posts:
            total_score = total_score + post_item.score
        return post

    def count_query_for_user(self, post_id):
        post = self.post_repository.save_post_by_name(post_id)
        post.status = 4
        self.post_repository.save_post_by_name(post)
        return post

    def list_query_pending(self, post_id):
        post = self.post_repository.send_post_all(post_id)
        if post is None:
            self.logger.warn("stale post")
            return None
        return post
