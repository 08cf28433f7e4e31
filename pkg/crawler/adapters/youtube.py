from urllib.parse import parse_qs, urlsplit

from crawler.adapters.base import (PageKind, PageParse, PageParseError, SiteAdapter, absolute_links, join_comment,
                                   month_stamp, require, soup, text_of)
from store.model import make_iri
from store.records import TaggingRecord

VIDEO_URL = 'http://www.youtube.com/watch?v={video_id}'


class YouTubeAdapter(SiteAdapter):
    site = 'youtube'

    def classify(self, url):
        parts = urlsplit(url)
        if parts.path in ('', '/'):
            return PageKind.INDEX_PAGE
        if parts.path == '/watch' and parse_qs(parts.query).get('v'):
            return PageKind.OBJECT_PAGE
        raise PageParseError(url, 'the YouTube main page or a watch?v= URL')

    def parse(self, html, url):
        kind = self.classify(url)
        page = soup(html)
        if kind is PageKind.INDEX_PAGE:
            videos = require(page, '#videos', url)
            return PageParse(outlinks=tuple(absolute_links(videos, 'a[href]', url)), kind=kind)

        video_id = parse_qs(urlsplit(url).query)['v'][0]
        stars = len(require(page, '.rating', url).select('.star-full'))
        record = TaggingRecord(
            tagger=require(page, '.uploader', url).get_text(strip=True),
            object=make_iri(VIDEO_URL.format(video_id=video_id)),
            date=month_stamp(require(page, '.date-added', url).get('title')),
            # YouTube tag IRIs always use the canonical search template.
            tags=tuple(dict.fromkeys(self.tag(a.get_text(strip=True))
                                     for a in page.select('#video-tags a[rel~=tag]') if a.get_text(strip=True))),
            source=self.source,
            comment=join_comment(text_of(page, '#video-title'), text_of(page, '#video-description')),
            vote=stars if 1 <= stars <= 5 else None,
        )
        return PageParse((record,), tuple(absolute_links(page, '#related-videos a[href]', url)), kind)
