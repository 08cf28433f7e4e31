import re
from urllib.parse import unquote, urlsplit

from crawler.adapters.base import (PageKind, PageParse, PageParseError, SiteAdapter, absolute_links, month_stamp,
                                   object_iri, parse_count, require, soup, text_of)
from store.records import TaggingRecord

_TAG_PAGE_RE = re.compile(r'^/tag/([^/?#]+)$')
_HISTORY_RE = re.compile(r'^/url/[0-9a-zA-Z]+$')


class DeliciousAdapter(SiteAdapter):
    """Tag cloud, paginated tag pages and bookmark history pages."""
    site = 'delicious'

    def classify(self, url):
        path = urlsplit(url).path.rstrip('/') or '/'
        if _TAG_PAGE_RE.match(path):
            return PageKind.TAG_PAGE
        if _HISTORY_RE.match(path):
            return PageKind.HISTORY_PAGE
        if path == '/tag':
            return PageKind.INDEX_PAGE
        raise PageParseError(url, 'a Delicious tag, history or tag cloud URL')

    def parse(self, html, url):
        kind = self.classify(url)
        page = soup(html)
        if kind is PageKind.INDEX_PAGE:
            cloud = require(page, '#tagcloud', url)
            return PageParse(outlinks=tuple(absolute_links(cloud, 'a[href]', url)), kind=kind)
        if kind is PageKind.TAG_PAGE:
            return self._parse_tag_page(page, url)
        return self._parse_history_page(page, url)

    def _tags(self, node, url):
        return tuple(dict.fromkeys(self.tag(a.get_text(strip=True), url)
                                   for a in node.select('a[rel~=tag]') if a.get_text(strip=True)))

    def _parse_tag_page(self, page, url):
        bookmarks = require(page, '#bookmarklist', url)
        entry_tag = self.tag(unquote(_TAG_PAGE_RE.match(urlsplit(url).path.rstrip('/')).group(1)), url)
        records, outlinks = [], []
        for post in bookmarks.select('li.post'):
            link = require(post, 'a.taggedlink', url)
            tags = self._tags(post, url)
            saved_by = post.select_one('a.saved-by')
            vote = parse_count(saved_by.get_text(), 1) if saved_by is not None else 1
            description = text_of(post, '.description')
            records.append(TaggingRecord(
                tagger=require(post, '.user', url).get_text(strip=True),
                object=object_iri(link['href'], url),
                date=month_stamp(require(post, '.date', url).get('title')),
                tags=tags,
                entry_tag=entry_tag if entry_tag in tags else None,
                source=self.source,
                comment=description if tags else (description or link.get_text(strip=True) or None),
                vote=vote,
            ))
            # Bookmarks saved by more than one tagger are followed to their history page.
            if saved_by is not None and vote > 1 and saved_by.get('href'):
                outlinks.extend(absolute_links(post, 'a.saved-by', url))
        outlinks.extend(absolute_links(page, '.pagination a[href]', url))
        outlinks.extend(absolute_links(page, '#related-tags a[href]', url))
        return PageParse(tuple(records), tuple(outlinks), PageKind.TAG_PAGE)

    def _parse_history_page(self, page, url):
        header = require(page, '#url-header', url)
        link = require(header, 'a.taggedlink', url)
        title = link.get_text(strip=True)
        obj = object_iri(link['href'], url)
        entries = require(page, '#history', url).select('li.history-entry')
        vote = parse_count(text_of(header, '.saved-count'), len(entries))
        records = []
        for entry in entries:
            tags = self._tags(entry, url)
            description = text_of(entry, '.description')
            records.append(TaggingRecord(
                tagger=require(entry, '.user', url).get_text(strip=True),
                object=obj,
                date=month_stamp(require(entry, '.date', url).get('title')),
                tags=tags,
                source=self.source,
                comment=description if tags else (description or title or None),
                vote=vote,
            ))
        return PageParse(tuple(records), (), PageKind.HISTORY_PAGE)
