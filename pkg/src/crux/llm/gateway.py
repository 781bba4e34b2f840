"""Single choke point for language-model calls: rendering, providers,
disk-backed response caching, retries, and bounded concurrency."""

from __future__ import annotations

import hashlib
import json
import os
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Protocol

import httpx

from ..core import CruxError
from .templates import render

ENV_BASE_URL = "CRUX_LLM_BASE_URL"
ENV_API_KEY = "CRUX_LLM_API_KEY"

# Extraction and True/False checking run as deterministically as the
# provider allows; generative templates default to a nonzero temperature.
GENERATIVE_TEMPLATES = {"clue_it", "clue_en", "pathb_gen"}
DEFAULT_GENERATIVE_TEMPERATURE = 0.7


class ProviderUnavailable(CruxError):
    pass


class RateLimited(CruxError):
    pass


class AuthMissing(CruxError):
    pass


class FixtureMiss(ProviderUnavailable):
    """Replay provider has no recorded response for this request digest."""


@dataclass(frozen=True)
class CompletionParams:
    model_id: str = "default"
    temperature: float = 0.0
    max_tokens: int = 1024


@dataclass(frozen=True)
class LlmExchange:
    template_id: str
    bound_inputs: dict[str, str]
    params: CompletionParams
    response_text: str
    cached: bool
    latency: float
    digest: str


def request_digest(
    template_id: str, bound_inputs: dict[str, str], params: CompletionParams
) -> str:
    """Stable digest of (template_id, bound_inputs, params); the cache key."""
    payload = json.dumps(
        {
            "template_id": template_id,
            "bound_inputs": dict(sorted(bound_inputs.items())),
            "params": {
                "model_id": params.model_id,
                "temperature": params.temperature,
                "max_tokens": params.max_tokens,
            },
        },
        ensure_ascii=False,
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


class Provider(Protocol):
    def complete(
        self, prompt: str, params: CompletionParams, digest: str, template_id: str
    ) -> str: ...


class LiveProvider:
    """HTTPS chat-completions client with exponential-backoff retries."""

    RETRYABLE = {429, 500, 502, 503, 504}

    def __init__(
        self,
        base_url: str,
        api_key: str,
        max_attempts: int = 4,
        backoff_base: float = 0.5,
        sleep: Callable[[float], None] = time.sleep,
        transport: httpx.BaseTransport | None = None,
    ):
        if not api_key:
            raise AuthMissing(f"{ENV_API_KEY} is not set")
        self.base_url = base_url.rstrip("/")
        self.api_key = api_key
        self.max_attempts = max_attempts
        self.backoff_base = backoff_base
        self._sleep = sleep
        self._client = httpx.Client(timeout=60.0, transport=transport)

    @classmethod
    def from_env(cls, **kwargs) -> "LiveProvider":
        base_url = os.environ.get(ENV_BASE_URL, "")
        api_key = os.environ.get(ENV_API_KEY, "")
        if not base_url:
            raise ProviderUnavailable(f"{ENV_BASE_URL} is not set")
        if not api_key:
            raise AuthMissing(f"{ENV_API_KEY} is not set")
        return cls(base_url, api_key, **kwargs)

    def complete(
        self, prompt: str, params: CompletionParams, digest: str, template_id: str
    ) -> str:
        url = f"{self.base_url}/chat/completions"
        body = {
            "model": params.model_id,
            "messages": [{"role": "user", "content": prompt}],
            "temperature": params.temperature,
            "max_tokens": params.max_tokens,
        }
        headers = {"Authorization": f"Bearer {self.api_key}"}
        last_status = None
        for attempt in range(self.max_attempts):
            if attempt:
                self._sleep(self.backoff_base * 2 ** (attempt - 1))
            try:
                resp = self._client.post(url, json=body, headers=headers)
            except httpx.TransportError as exc:
                last_status = None
                last_error = exc
                continue
            if resp.status_code == 200:
                data = resp.json()
                return data["choices"][0]["message"]["content"]
            last_status = resp.status_code
            last_error = None
            if resp.status_code not in self.RETRYABLE:
                break
        if last_status == 429:
            raise RateLimited(f"rate limited after {self.max_attempts} attempts")
        raise ProviderUnavailable(
            f"provider error (status {last_status}): {last_error!r}"
        )


class ReplayProvider:
    """Deterministic provider backed by a JSON-lines fixture file.

    Each line is ``{"digest": ..., "template_id": ..., "response_text": ...}``.
    """

    def __init__(self, fixture_path: str | Path | None = None):
        self.responses: dict[str, str] = {}
        if fixture_path is not None:
            self.load(fixture_path)

    def load(self, fixture_path: str | Path) -> None:
        with Path(fixture_path).open(encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                rec = json.loads(line)
                self.responses[rec["digest"]] = rec["response_text"]

    def add(self, digest: str, response_text: str) -> None:
        self.responses[digest] = response_text

    def complete(
        self, prompt: str, params: CompletionParams, digest: str, template_id: str
    ) -> str:
        if digest not in self.responses:
            raise FixtureMiss(f"no fixture for {template_id} digest {digest}")
        return self.responses[digest]


class ScriptedProvider:
    """Test double replaying a fixed queue of responses in call order."""

    def __init__(self, responses: list[str]):
        self.responses = list(responses)
        self.calls: list[str] = []

    def complete(
        self, prompt: str, params: CompletionParams, digest: str, template_id: str
    ) -> str:
        self.calls.append(prompt)
        if not self.responses:
            raise ProviderUnavailable("scripted provider exhausted")
        return self.responses.pop(0)


@dataclass
class Gateway:
    """Caching, concurrency-bounded front end over a provider."""

    provider: Provider
    cache_dir: Path | None = None
    max_in_flight: int = 4
    _memory_cache: dict[str, str] = field(default_factory=dict)
    _lock: threading.Lock = field(default_factory=threading.Lock)

    def __post_init__(self):
        self._semaphore = threading.BoundedSemaphore(self.max_in_flight)
        if self.cache_dir is not None:
            self.cache_dir = Path(self.cache_dir)
            self.cache_dir.mkdir(parents=True, exist_ok=True)

    def default_params(self, template_id: str) -> CompletionParams:
        if template_id in GENERATIVE_TEMPLATES:
            return CompletionParams(temperature=DEFAULT_GENERATIVE_TEMPERATURE)
        return CompletionParams(temperature=0.0)

    def _cache_get(self, digest: str) -> str | None:
        with self._lock:
            if digest in self._memory_cache:
                return self._memory_cache[digest]
        if self.cache_dir is not None:
            path = self.cache_dir / f"{digest}.json"
            if path.exists():
                text = json.loads(path.read_text(encoding="utf-8"))["response_text"]
                with self._lock:
                    self._memory_cache[digest] = text
                return text
        return None

    def _cache_put(self, digest: str, response_text: str) -> None:
        with self._lock:
            self._memory_cache[digest] = response_text
        if self.cache_dir is not None:
            path = self.cache_dir / f"{digest}.json"
            path.write_text(
                json.dumps({"response_text": response_text}, ensure_ascii=False),
                encoding="utf-8",
            )

    def complete(
        self,
        template_id: str,
        bound_inputs: dict[str, str],
        params: CompletionParams | None = None,
    ) -> LlmExchange:
        if params is None:
            params = self.default_params(template_id)
        prompt = render(template_id, bound_inputs)
        digest = request_digest(template_id, bound_inputs, params)
        cached = self._cache_get(digest)
        if cached is not None:
            return LlmExchange(
                template_id, dict(bound_inputs), params, cached, True, 0.0, digest
            )
        start = time.monotonic()
        with self._semaphore:
            text = self.provider.complete(prompt, params, digest, template_id)
        latency = time.monotonic() - start
        self._cache_put(digest, text)
        return LlmExchange(
            template_id, dict(bound_inputs), params, text, False, latency, digest
        )


def write_fixture(
    path: str | Path, records: list[tuple[str, dict[str, str], CompletionParams, str]]
) -> None:
    """Write a replay fixture: (template_id, bound_inputs, params, response)."""
    with Path(path).open("w", encoding="utf-8") as fh:
        for template_id, bound_inputs, params, response_text in records:
            fh.write(
                json.dumps(
                    {
                        "digest": request_digest(template_id, bound_inputs, params),
                        "template_id": template_id,
                        "response_text": response_text,
                    },
                    ensure_ascii=False,
                )
                + "\n"
            )
