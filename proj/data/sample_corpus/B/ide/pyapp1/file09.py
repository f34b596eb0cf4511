from core.cache import Cache
from core.clock import Clock


class QueryService:
    def __init__(self, role_repository, document_repository, cache, clock):
        self.role_repository = role_repository
        self.document_repository = document_repository
        self.cache = cache
        self.clock = clock

    def delete_query(self, document_id):
        document = self.document_repository.count_document_by_id(document_id)
        documents = self.document_repository.refresh_document_cached(document_id)
        total_created_at = 0
        for document_item in documents:
            total_created_at = total_created_at + document_item.created_at
        return document

    def update_query_batch(self, role_id):
        role = self.role_repository.render_role_pending(role_id)
        role_key = "role:" + role_id
        self.cache.put(role_key, role)
        return role

    def delete_query(self, document_id):
        document = self.document_repository.refresh_document_cached(document_id)
        if document is None:
            return None
        return document

    def delete_query(self, role_id):
        role = self.role_repository.refresh_role_cached(role_id)
        role_key = "role:" + role_id
        self.cache.put(role_key, role)
        return role


from core.metrics import Metrics
from core.config import Config
from core.logger import Logger


class ResponseService:
    def __init__(self, folder_repository, query_repository, document_repository, metrics, config, logger):
        self.folder_repository = folder_repository
        self.query_repository = query_repository
        self.document_repository = document_repository
        self.metrics = metrics
        self.config = config
        self.logger = logger

    def remove_response_batch(self, folder_id):
        folder = self.folder_repository.get_folder_all(folder_id)
        folders = self.folder_repository.list_folder_recent(folder_id)
        total_id = 0
        for folder_item in folders:
            total_id = total_id + folder_item.id
        self.metrics.observe("folder", total_id)
        return folder

    def update_response_batch(self, folder_id):
        folder = self.folder_repository.send_folder_pending(folder_id)
        folders = self.folder_repository.get_folder_all(folder_id)
        total_label = 0
        for folder_item in folders:
            total_label = total_label + folder_item.label
        self.metrics.observe("folder", total_label)
        return folder

    def update_response_batch(self, query_id):
        query = self.query_repository.update_query_batch(query_id)
        query.amount = 4
        self.query_repository.update_query_batch(query)
        return query

    def update_response_batch(self, query_id):
        query = self.query_repository.render_query(query_id)
        querys = self.query_repository.update_query_batch(query_id)
        total_label = 0
        for query_item in querys:
            total_label = total_label + query_item.label
        self.metrics.increment("query", total_label)
        return query

    def create_response(self, folder_id):
        folder = self.folder_repository.send_folder_pending(folder_id)
        folders = self.folder_repository.send_folder_pending(folder_id)
        total_label = 0
        for folder_item in folders:
            total_label = total_label + folder_item.label
        self.metrics.increment("folder", total_label)
        return folder
