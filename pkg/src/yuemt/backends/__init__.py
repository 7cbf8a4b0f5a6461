"""Translation backends: descriptors, registry, toy cipher, external adapter."""

from yuemt.backends.base import (
    Backend,
    TranslationRequest,
    TranslationResult,
)
from yuemt.backends.descriptors import (
    BASES,
    CategoryParts,
    ModelDescriptor,
    format_category,
    format_descriptor,
    make_category,
    parse_category,
    parse_descriptor,
)
from yuemt.backends.external import ExternalProcessBackend
from yuemt.backends.registry import ModelRegistry, build_backend, list_backends
from yuemt.backends.toy import (
    CipherBackend,
    TableBackend,
    apply_cipher,
    argmax_target,
    cipher_table,
    load_table,
    save_table,
)

__all__ = [
    "BASES",
    "Backend",
    "CategoryParts",
    "CipherBackend",
    "ExternalProcessBackend",
    "ModelDescriptor",
    "ModelRegistry",
    "TableBackend",
    "TranslationRequest",
    "TranslationResult",
    "apply_cipher",
    "argmax_target",
    "build_backend",
    "cipher_table",
    "format_category",
    "format_descriptor",
    "list_backends",
    "load_table",
    "make_category",
    "parse_category",
    "parse_descriptor",
    "save_table",
]
