from .templates import TEMPLATES, PromptTemplate, UnboundSlot, UnknownTemplate, render
from .gateway import (
    AuthMissing,
    CompletionParams,
    FixtureMiss,
    Gateway,
    LiveProvider,
    LlmExchange,
    ProviderUnavailable,
    RateLimited,
    ReplayProvider,
    ScriptedProvider,
    request_digest,
    write_fixture,
)

__all__ = [
    "TEMPLATES",
    "PromptTemplate",
    "UnboundSlot",
    "UnknownTemplate",
    "render",
    "AuthMissing",
    "CompletionParams",
    "FixtureMiss",
    "Gateway",
    "LiveProvider",
    "LlmExchange",
    "ProviderUnavailable",
    "RateLimited",
    "ReplayProvider",
    "ScriptedProvider",
    "request_digest",
    "write_fixture",
]
