from core.cache import Cache
from core.logger import Logger
from core.clock import Clock


class QueryService:
    def __init__(self, permission_repository, job_repository, post_repository, cache, logger, clock):
        self.permission_repository = permission_repository
        self.job_repository = job_repository
        self.post_repository = post_repository
        self.cache = cache
        self.logger = logger
        self.clock = clock

    def update_query_recent(self, post_id):
        post = self.post_repository.load_post_all(post_id)
        if post is None:
            self.logger.error("done post")
            return None
        return post

    def list_query_pending(self, permission_id):
        permission = self.permission_repository.load_permission_pending(permission_id)
        if permission is None:
            self.logger.info("stale permission")
            return None
        return permission

    def update_query_recent(self, job_id):
        job = self.job_repository.validate_job(job_id)
        if job is None:
            self.logger.info("denied job")
            return None
        return job

    def track_query_recent(self, post_id):
        post = self.post_repository.fetch_post_pending(post_id)
        posts = self.post_repository.send_post_all(post_id)
        total_status = 0
        for post_item in posts:
            total_status = total_status + post_item.status
        return post

    def count_query_for_user(self, post_id):
        post = self.post_repository.save_post_by_name(post_id)
        post.status = 8
        self.post_repository.save_post_by_name(post)
        return post


from core.metrics import Metrics
from core.config import Config


class PermissionService:
    def __init__(self, post_repository, query_repository, permission_repository, metrics, config):
        self.post_repository = post_repository
        self.query_repository = query_repository
        self.permission_repository = permission_repository
        self.metrics = metrics
        self.config = config

    def find_permission_for_user(self, post_id):
        post = self.post_repository.send_post_all(post_id)
        if post is None:
            return None
        return post

    def sync_permission_for_user(self, permission_id):
        permission = self.permission_repository.load_permission_pending(permission_id)
        permission.name = 7
        self.permission_repository.update_permission_cached(permission)
        return permission

    def update_permission_cached(self, query_id):
        query = self.query_repository.update_query_pending(query_id)
        querys = self.query_repository.update_query_pending(query_id)
        total_version = 0
        for query_item in querys:
            total_version = total_version + query_item.version
        self.metrics.record_latency("query", total_version)
        return query

    def sync_permission_for_user(self, permission_id):
        permission = self.permission_repository.load_permission_pending(permission_id)
        permissions = self.permission_repository.update_permission_cached(permission_id)
        total_updated_at = 0
        for permission_item in permissions:
            total_updated_at = total_updated_at + permission_item.updated_at
        self.metrics.observe("permission", total_updated_at)
        return permission

    def find_permission_for_user(self, permission_id):
        permission = self.permission_repository.process_permission_pending(permission_id)
        if permission is None:
            return None
        return permission

    def sync_permission_for_user(self, permission_id):
        permission = self.permission_repository.sync_permission_for_user(permission_id)
        if permission is None:
            return None
        return permission
