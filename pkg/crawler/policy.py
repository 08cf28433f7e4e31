import re
from dataclasses import dataclass, field, replace
from typing import FrozenSet, Tuple
from urllib.parse import parse_qsl, urlencode, urlsplit, urlunsplit

from store.model import InvalidIRIError
from utils.load import load_site_settings


@dataclass(frozen=True)
class CrawlPolicy:
    site: str
    source: str
    allowed_patterns: Tuple[str, ...] = ()
    dedup_strips_query: bool = True
    query_whitelist: FrozenSet[str] = frozenset()
    max_pages: int = 1000
    worker_count: int = 1
    politeness_delay: float = 0.0
    seeds: Tuple[str, ...] = ()
    _compiled: Tuple[re.Pattern, ...] = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.worker_count < 1:
            raise ValueError(f"worker_count must be at least 1, got {self.worker_count}")
        if self.max_pages < 0:
            raise ValueError(f"max_pages must not be negative, got {self.max_pages}")
        object.__setattr__(self, 'query_whitelist', frozenset(self.query_whitelist))
        object.__setattr__(self, '_compiled', tuple(re.compile(pattern) for pattern in self.allowed_patterns))

    def allows(self, key):
        return any(pattern.search(key) for pattern in self._compiled)

    def with_overrides(self, **overrides):
        return replace(self, **{name: value for name, value in overrides.items() if value is not None})


def load_policy(site, **overrides):
    """CrawlPolicy from settings/sites.yaml; keyword overrides that are None are ignored."""
    settings = load_site_settings(site)
    policy = CrawlPolicy(
        site=site,
        source=settings['source'],
        allowed_patterns=tuple(settings.get('allowed_patterns', [])),
        dedup_strips_query=settings.get('dedup_strips_query', True),
        query_whitelist=frozenset(settings.get('query_whitelist') or []),
        max_pages=settings.get('max_pages', 1000),
        worker_count=settings.get('workers', 1),
        politeness_delay=settings.get('politeness_delay', 0.0),
        seeds=tuple(settings.get('seeds', [])),
    )
    return policy.with_overrides(**overrides)


def dedup_key(url, policy):
    """Normalized URL under which a page counts as visited."""
    parts = urlsplit(str(url).strip())
    if not parts.scheme or not parts.netloc:
        raise InvalidIRIError(f"Not an absolute URL: {url!r}")
    query = parts.query
    if policy.dedup_strips_query:
        kept = sorted((name, value) for name, value in parse_qsl(query, keep_blank_values=True)
                      if name in policy.query_whitelist)
        query = urlencode(kept)
    return urlunsplit((parts.scheme.lower(), parts.netloc.lower(), parts.path, query, ''))


def should_visit(url, policy, frontier):
    try:
        key = dedup_key(url, policy)
    except InvalidIRIError:
        return False
    return policy.allows(key) and not frontier.is_known(key) and frontier.claimed < policy.max_pages
