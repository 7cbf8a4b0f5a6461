"""Model serving: REST API with an LRU-bounded model manager."""

from yuemt.server.app import ServerConfig, create_app, serve
from yuemt.server.manager import LruReference, ModelManager

__all__ = ["LruReference", "ModelManager", "ServerConfig", "create_app", "serve"]
