from crawler.adapters.delicious import DeliciousAdapter
from crawler.adapters.flickr import FlickrAdapter
from crawler.adapters.generic import GenericFixtureAdapter
from crawler.adapters.youtube import YouTubeAdapter

ADAPTERS = {adapter.site: adapter for adapter in (DeliciousAdapter, FlickrAdapter, YouTubeAdapter,
                                                  GenericFixtureAdapter)}


def get_adapter(site):
    if site not in ADAPTERS:
        raise ValueError(f"No adapter for site: {site}")
    return ADAPTERS[site]()
