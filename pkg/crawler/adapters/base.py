import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Tuple
from urllib.parse import urldefrag, urljoin, urlsplit

import pandas as pd
from bs4 import BeautifulSoup
from rdflib import URIRef

from store.model import MonthStamp, make_iri
from store.tags import tag_iri, tag_templates
from utils.load import load_site_settings

_COUNT_RE = re.compile(r'(\d[\d,]*)')


class PageKind(str, Enum):
    TAG_PAGE = 'tag-page'
    OBJECT_PAGE = 'object-page'
    HISTORY_PAGE = 'history-page'
    INDEX_PAGE = 'index-page'


class PageParseError(ValueError):
    def __init__(self, url, anchor):
        super().__init__(f"Unrecognized page structure at {url}: missing {anchor}")
        self.url = url
        self.anchor = anchor


@dataclass(frozen=True)
class PageParse:
    """Records (without tagging ids), absolute outlinks and related-tag pairs found on one page."""
    records: Tuple = ()
    outlinks: Tuple[str, ...] = ()
    kind: PageKind = PageKind.INDEX_PAGE
    related: Tuple[Tuple[URIRef, URIRef], ...] = ()


class SiteAdapter(ABC):
    site = None

    def __init__(self):
        self.source = URIRef(load_site_settings(self.site)['source'])

    @abstractmethod
    def classify(self, url):
        ...

    @abstractmethod
    def parse(self, html, url):
        ...

    def tag(self, text, page_url=None):
        """Tag IRI for text, using the template whose host matches the page when there is one."""
        host = urlsplit(page_url).netloc.lower() if page_url else None
        for index, template in enumerate(tag_templates(self.site)):
            if urlsplit(template).netloc.lower() == host:
                return tag_iri(self.site, text, index)
        return tag_iri(self.site, text)


def soup(html):
    return BeautifulSoup(html, 'html.parser')


def require(node, selector, url):
    found = node.select_one(selector)
    if found is None:
        raise PageParseError(url, selector)
    return found


def text_of(node, selector, default=None):
    found = node.select_one(selector)
    return found.get_text(' ', strip=True) if found is not None else default


def absolute_links(node, selector, url):
    """Absolute hrefs (fragment removed) of every element matching selector, in document order."""
    links = []
    for anchor in node.select(selector):
        href = anchor.get('href')
        if href:
            links.append(urldefrag(urljoin(url, href.strip()))[0])
    return links


def object_iri(href, url):
    return make_iri(urldefrag(urljoin(url, href.strip()))[0])


def parse_count(text, default=None):
    """First integer in text ('saved by 1,024 people' -> 1024)."""
    match = _COUNT_RE.search(text or '')
    return int(match.group(1).replace(',', '')) if match else default


def month_stamp(value):
    """Truncate a page date (ISO or free text) to month level."""
    if not value:
        raise ValueError("Page date is missing")
    return MonthStamp.from_date(pd.to_datetime(value))


def join_comment(*parts):
    text = ' | '.join(part for part in parts if part)
    return text or None
