from crawler.adapters.base import (PageKind, PageParse, PageParseError, SiteAdapter, absolute_links, month_stamp,
                                   object_iri, require, soup)
from store.records import TaggingRecord

_REQUIRED = ('data-tagger', 'data-object', 'data-date')


class GenericFixtureAdapter(SiteAdapter):
    """Microformat pages: div.post[data-tagger][data-object][data-date][data-vote] holding a[rel=tag] links."""
    site = 'generic-fixture'

    def classify(self, url):
        return PageKind.INDEX_PAGE if url.rstrip('/').endswith('index.html') else PageKind.OBJECT_PAGE

    def parse(self, html, url):
        content = require(soup(html), '#content', url)
        records = []
        for post in content.select('div.post'):
            for attribute in _REQUIRED:
                if not post.get(attribute):
                    raise PageParseError(url, f"div.post[{attribute}]")
            vote = post.get('data-vote')
            records.append(TaggingRecord(
                tagger=post['data-tagger'],
                object=object_iri(post['data-object'], url),
                date=month_stamp(post['data-date']),
                tags=tuple(dict.fromkeys(self.tag(a.get_text(strip=True))
                                         for a in post.select('a[rel~=tag]') if a.get_text(strip=True))),
                source=self.source,
                vote=int(vote) if vote else None,
            ))
        outlinks = absolute_links(content, 'a[href]:not([rel~=tag])', url)
        return PageParse(tuple(records), tuple(outlinks), self.classify(url))
