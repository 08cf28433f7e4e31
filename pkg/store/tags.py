from functools import lru_cache
from urllib.parse import quote, unquote, urlsplit

from rdflib import URIRef

from utils.load import load_site_settings, site_names


@lru_cache(maxsize=None)
def _site_templates():
    return tuple((site, tuple(load_site_settings(site)['tag_templates'])) for site in site_names())


def tag_templates(site):
    for name, templates in _site_templates():
        if name == site:
            return list(templates)
    raise ValueError(f"No site settings found for: {site}")


def tag_iri(site, text, template=0):
    """Build the tag IRI for a site by substituting percent-encoded text into a tag template."""
    return URIRef(tag_templates(site)[template].replace('{tag}', quote(text, safe='')))


def tag_namespaces():
    """Prefix name -> namespace for every template that ends in the tag text."""
    namespaces = {}
    for site, templates in _site_templates():
        for index, template in enumerate(templates):
            head, _, tail = template.partition('{tag}')
            if tail or '?' in head:
                continue
            namespaces[site.replace('-', '_') + (str(index) if index else '')] = head
    return namespaces


def tag_text(iri):
    """Recover the local tag text from a tag IRI, trying every site template first."""
    value = str(iri)
    for _, templates in _site_templates():
        for template in templates:
            head, _, tail = template.partition('{tag}')
            if value.startswith(head) and value.endswith(tail) and len(value) > len(head) + len(tail):
                return unquote(value[len(head):len(value) - len(tail)])
    path = urlsplit(value).path.rstrip('/')
    return unquote(path.rsplit('/', 1)[-1]) if path else value
