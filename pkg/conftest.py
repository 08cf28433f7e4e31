import os

import pytest
from rdflib import URIRef

from ontology.schema import load_schema
from store.graphs import load
from store.model import MonthStamp
from store.records import TaggingRecord
from utils.load import project_root

COMMONCRAFT_NODE = URIRef('http://info.slis.indiana.edu/~dingying/10357fc9-f6d2-4347-998c-aa26d63ef81b')
COMMONCRAFT_OBJECT = URIRef('http://www.commoncraft.com/show')
COMMONCRAFT_COMMENT = 'The CommonCraft Show | Common Craft - Social Design for the Web'
COMMONCRAFT_TAGS = tuple(URIRef(f'http://del.icio.us/tag/{text}') for text in
                         ('social_networking', 'design', 'Web2.0', 'instructional_design', 'tutorials'))

GENERIC_PAGES = 50
GENERIC_VARIANTS_PER_PAGE = 10


def example_path(name):
    return os.path.join(project_root(), 'data', 'examples', name)


def fixture_dir(site):
    return os.path.join(project_root(), 'data', 'fixtures', site)


@pytest.fixture(scope='session')
def schema():
    return load_schema()


@pytest.fixture
def commoncraft_graph():
    return load(example_path('commoncraft.ttl'))


@pytest.fixture
def commoncraft_record():
    return TaggingRecord(
        tagger='sborrelli',
        object=COMMONCRAFT_OBJECT,
        date=MonthStamp.parse('Jun 07'),
        tags=COMMONCRAFT_TAGS,
        tagging_id=COMMONCRAFT_NODE,
        comment=COMMONCRAFT_COMMENT,
        vote=103,
    )


def generic_page_url(index):
    return f'http://fixture.test/page{index:02d}.html'


def _generic_page(index):
    links = []
    for k in range(GENERIC_VARIANTS_PER_PAGE):
        target = (index + k + 1) % GENERIC_PAGES
        links.append(f'<a href="/page{target:02d}.html?ref={index}&amp;k={k}#s{k}">page {target}</a>')
    links.append('<a href="http://elsewhere.test/page00.html">off site</a>')
    tags = sorted({f't{index % 5}', f't{(index * 3) % 11}'})
    tag_links = ''.join(f'<a rel="tag" href="/tag/{tag}">{tag}</a>' for tag in tags)
    return (
        f'<html><body><div id="content">'
        f'<div class="post" data-tagger="user{index % 7}" data-object="http://objects.test/item{index}" '
        f'data-date="2007-{index % 12 + 1:02d}-15" data-vote="{index}">{tag_links}</div>'
        f'{"".join(links)}'
        f'</div></body></html>'
    )


@pytest.fixture
def generic_corpus(tmp_path):
    """50 linked pages, 10 query/fragment variants of in-site links per page (500 variant links)."""
    manifest = []
    for index in range(GENERIC_PAGES):
        name = f'page{index:02d}.html'
        (tmp_path / name).write_text(_generic_page(index), encoding='utf-8')
        manifest.append(f'{generic_page_url(index)}: {name}')
    (tmp_path / 'manifest.yaml').write_text('\n'.join(manifest) + '\n', encoding='utf-8')
    return str(tmp_path)
