import re
from urllib.parse import unquote, urlsplit, urlunsplit

from crawler.adapters.base import (PageKind, PageParse, PageParseError, SiteAdapter, absolute_links, join_comment,
                                   month_stamp, parse_count, require, soup, text_of)
from store.model import make_iri
from store.records import TaggingRecord

_TAG_PAGE_RE = re.compile(r'^/photos/tags/([^/?#]+)$')
_PHOTO_PAGE_RE = re.compile(r'^/photos/[^/?#]+/\d+$')


class FlickrAdapter(SiteAdapter):
    site = 'flickr'

    def classify(self, url):
        path = urlsplit(url).path.rstrip('/')
        if path == '/photos/tags':
            return PageKind.INDEX_PAGE
        if _TAG_PAGE_RE.match(path):
            return PageKind.TAG_PAGE
        if _PHOTO_PAGE_RE.match(path):
            return PageKind.OBJECT_PAGE
        raise PageParseError(url, 'a Flickr tag cloud, tag or photo URL')

    def parse(self, html, url):
        kind = self.classify(url)
        page = soup(html)
        if kind is PageKind.INDEX_PAGE:
            cloud = require(page, '#tagcloud', url)
            return PageParse(outlinks=tuple(absolute_links(cloud, 'a[href]', url)), kind=kind)
        if kind is PageKind.TAG_PAGE:
            return self._parse_tag_page(page, url)
        return self._parse_photo_page(page, url)

    def _parse_tag_page(self, page, url):
        photos = require(page, '#photo-list', url)
        entry_tag = self.tag(unquote(_TAG_PAGE_RE.match(urlsplit(url).path.rstrip('/')).group(1)), url)
        # Tags listed next to the entry tag become related-tag pairs.
        related = tuple(dict.fromkeys(
            (entry_tag, tag) for tag in (self.tag(a.get_text(strip=True), url)
                                         for a in page.select('#related-tags a[rel~=tag]')
                                         if a.get_text(strip=True))
            if tag != entry_tag))
        outlinks = absolute_links(photos, 'a.photo-link[href]', url)
        outlinks.extend(absolute_links(page, '.pagination a[href]', url))
        return PageParse(outlinks=tuple(outlinks), kind=PageKind.TAG_PAGE, related=related)

    def _parse_photo_page(self, page, url):
        image = require(page, 'img.main-photo', url)
        src = urlsplit(image.get('src', ''))
        if not src.netloc:
            raise PageParseError(url, 'img.main-photo[src]')
        tags = tuple(dict.fromkeys(self.tag(a.get_text(strip=True), url)
                                   for a in page.select('#tags a[rel~=tag]') if a.get_text(strip=True)))
        record = TaggingRecord(
            tagger=require(page, 'a.owner', url).get_text(strip=True),
            object=make_iri(urlunsplit((src.scheme, src.netloc, src.path, '', ''))),
            date=month_stamp(require(page, '.date-taken', url).get('title')),
            tags=tags,
            source=make_iri(url),
            comment=join_comment(text_of(page, '.photo-title'), text_of(page, '.photo-description')),
            vote=parse_count(text_of(page, '.favorites'), 0),
        )
        return PageParse((record,), (), PageKind.OBJECT_PAGE)
