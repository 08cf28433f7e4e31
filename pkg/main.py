import argparse
import logging
import random
import sys

import pandas as pd
from rdflib import Literal

from analysis import cooccurrence as cooc
from analysis import frequency, sources
from analysis.histogram import core_tags, tag_histogram
from analysis.powerlaw import fit_power_law, rank_frequency_series
from crawler.adapters import get_adapter
from crawler.engine import GraphSink, crawl
from crawler.fetch import FetchError, FixtureFetcher, LiveFetcher
from crawler.policy import load_policy
from ontology.alignment import expand_graph
from ontology.inference import infer_closure
from ontology.owl import export_owl
from ontology.schema import SchemaError, load_schema
from ontology.validation import validate
from query import scenarios
from query.engine import evaluate
from query.model import QueryError
from query.textformat import load_query
from store.graphs import load, merge, save
from store.model import InvalidIRIError, new_graph
from store.rdfxml import serialize_rdfxml
from store.records import RecordError, mint_tagging_id, read_records_csv, record_to_triples
from store.turtle import TurtleSyntaxError, serialize_turtle
from utils.load import load_analysis_settings, site_names

LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'

# Failures reported as exit status 1; argparse usage errors exit with 2.
HANDLED_ERRORS = (OSError, TurtleSyntaxError, RecordError, QueryError, FetchError, InvalidIRIError, SchemaError,
                  frequency.FrequencyRangeError, ValueError)


def write_output(text, out=None):
    if out:
        with open(out, 'w', encoding='utf-8') as file:
            file.write(text)
        logging.info(f"Output written to {out}")
    else:
        sys.stdout.write(text)


def format_table(table_df, fmt='text'):
    if fmt == 'csv':
        return table_df.to_csv(index=False, lineterminator='\n')
    if table_df.empty:
        return '  '.join(table_df.columns) + '\n'
    return table_df.to_string(index=False) + '\n'


def run_crawl(args):
    policy = load_policy(args.site, max_pages=args.max_pages, worker_count=args.workers)
    if args.live:
        fetcher = LiveFetcher(politeness_delay=policy.politeness_delay)
    elif args.fixtures_dir:
        fetcher = FixtureFetcher(args.fixtures_dir)
    else:
        raise ValueError("crawl needs --fixtures-dir or --live")
    seeds = args.seeds or list(policy.seeds)
    logging.info(f"Crawling {args.site} from {len(seeds)} seeds with {policy.worker_count} workers...")
    sink = GraphSink()
    stats = crawl(seeds, get_adapter(args.site), fetcher, policy, sink, seed=args.seed)
    save(sink.graph, args.out)
    if args.stats_csv:
        stats.to_csv(args.stats_csv)
    print(stats.summary())
    return 0


def run_import(args):
    schema = load_schema()
    if args.input.lower().endswith('.csv'):
        rng = random.Random(args.seed)
        records = [record.with_id(mint_tagging_id(randomness=rng)) for record in read_records_csv(args.input)]
        g = merge(record_to_triples(record, schema) for record in records)
    else:
        g = load(args.input)
    if args.expand:
        g = expand_graph(g, schema)
    if args.closure:
        g = infer_closure(g, schema)
    save(g, args.out)
    return 0


def run_merge(args):
    logging.info(f"Merging {len(args.inputs)} graphs...")
    save(merge(load(path) for path in args.inputs), args.out)
    return 0


def run_validate(args):
    violations = validate(load(args.input), load_schema())
    lines = [f"{violation.subject}\t{violation.rule}\t{violation.detail}" for violation in violations]
    lines.append(f"{len(violations)} violations")
    write_output('\n'.join(lines) + '\n', args.out)
    return 1 if violations else 0


def run_query(args):
    g = load(args.input)
    if args.scenario == 'scenario1':
        rows = scenarios.objects_by_tag(args.tag, g)
        table_df = pd.DataFrame([(str(obj), vote) for obj, vote in rows], columns=['object', 'vote'])
    elif args.scenario == 'scenario2':
        rows = scenarios.taggers_of_object(args.object, g)
        table_df = pd.DataFrame([(tagger, ' '.join(tags)) for tagger, tags in rows], columns=['tagger', 'tags'])
    elif args.scenario == 'scenario3':
        rows = scenarios.objects_of_tagger(args.tagger, g)
        table_df = pd.DataFrame([(str(obj), ' '.join(tags)) for obj, tags in rows], columns=['object', 'tags'])
    else:
        query = load_query(args.file)
        rows = evaluate(query, g)
        table_df = pd.DataFrame([[str(value) for value in row.values] for row in rows],
                                columns=list(query.select_vars))
    logging.info(f"{len(table_df)} result rows")
    write_output(format_table(table_df, args.format), args.out)
    return 0


def run_stats(args):
    g = load(args.input)
    schema = load_schema()
    logging.info(f"Tag text folding: {'on' if args.fold_tag_text else 'off'}")

    if args.report == 'sources':
        summaries = sources.source_summary(g, schema, by_site=args.by_site)
        logging.info(f"Corpus total: {sources.corpus_total(summaries)} tag occurrences")
        table_df = sources.to_frame(summaries)
    elif args.report == 'cooc':
        table_df = cooc.to_frame(cooc.cooccurrence(g, args.axis, schema))
    else:
        histogram = tag_histogram(g, schema, fold_tag_text=args.fold_tag_text)
        if args.report == 'freq':
            table_df = frequency.to_frame(frequency.frequency_table(histogram, args.edges))
        elif args.report == 'core':
            min_count = args.min_count or load_analysis_settings()['core_min_count']
            core = core_tags(histogram, min_count)
            logging.info(f"{len(core)} of {histogram.unique_tags} unique tags occur at least {min_count} times")
            table_df = pd.DataFrame([(str(tag), count) for tag, count in histogram.most_common() if tag in core],
                                    columns=['tag', 'count'])
        else:
            fit = fit_power_law(histogram)
            series_df = rank_frequency_series(histogram)
            if args.series_out:
                series_df.to_csv(args.series_out, index=False)
                logging.info(f"Rank-frequency series saved to {args.series_out}")
            if args.plot:
                from analysis.plot import plot_rank_frequency
                plot_rank_frequency(series_df, args.plot, fit)
            table_df = pd.DataFrame([{'unique_tags': histogram.unique_tags, 'exponent': round(fit.exponent, 4),
                                      'r_squared': round(fit.r_squared, 4)}])
    write_output(format_table(table_df, args.format), args.out)
    return 0


def triples_frame(g):
    rows = sorted((str(s), str(p), str(o), 'literal' if isinstance(o, Literal) else 'iri')
                  for s, p, o in g)
    return pd.DataFrame(rows, columns=['subject', 'predicate', 'object', 'object_kind'])


def run_export(args):
    if args.format == 'owl':
        write_output(export_owl(load_schema()), args.out)
        return 0
    g = load(args.input) if args.input else new_graph()
    if args.format == 'rdfxml':
        write_output(serialize_rdfxml(g), args.out)
    elif args.format == 'turtle':
        write_output(serialize_turtle(g), args.out)
    else:
        write_output(format_table(triples_frame(g), 'csv'), args.out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog='main.py', description='UTO social tagging toolkit')
    parser.add_argument('--verbose', action='store_true', help='debug logging')
    commands = parser.add_subparsers(dest='command', required=True)

    crawl_parser = commands.add_parser('crawl', help='crawl a site into a Turtle graph')
    crawl_parser.add_argument('--site', required=True, choices=site_names())
    crawl_parser.add_argument('--seeds', nargs='*', default=None)
    crawl_parser.add_argument('--fixtures-dir')
    crawl_parser.add_argument('--live', action='store_true')
    crawl_parser.add_argument('--max-pages', type=int)
    crawl_parser.add_argument('--workers', type=int)
    crawl_parser.add_argument('--seed', type=int, default=0)
    crawl_parser.add_argument('--stats-csv')
    crawl_parser.add_argument('--out', required=True)
    crawl_parser.set_defaults(handler=run_crawl)

    import_parser = commands.add_parser('import', help='import a Turtle graph or a records CSV')
    import_parser.add_argument('--in', dest='input', required=True)
    import_parser.add_argument('--out', required=True)
    import_parser.add_argument('--seed', type=int, default=0)
    import_parser.add_argument('--expand', action='store_true', help='add UTO rewrites of aligned terms')
    import_parser.add_argument('--closure', action='store_true', help='materialize inferred triples')
    import_parser.set_defaults(handler=run_import)

    merge_parser = commands.add_parser('merge', help='union of Turtle graphs')
    merge_parser.add_argument('--in', dest='inputs', nargs='+', required=True)
    merge_parser.add_argument('--out', required=True)
    merge_parser.set_defaults(handler=run_merge)

    validate_parser = commands.add_parser('validate', help='check a graph against UTO constraints')
    validate_parser.add_argument('--in', dest='input', required=True)
    validate_parser.add_argument('--out')
    validate_parser.set_defaults(handler=run_validate)

    query_parser = commands.add_parser('query', help='run a search scenario or a raw query')
    query_parser.add_argument('scenario', choices=['scenario1', 'scenario2', 'scenario3', 'raw'])
    query_parser.add_argument('--in', dest='input', required=True)
    query_parser.add_argument('--tag')
    query_parser.add_argument('--object')
    query_parser.add_argument('--tagger')
    query_parser.add_argument('--file')
    query_parser.add_argument('--format', choices=['text', 'csv'], default='text')
    query_parser.add_argument('--out')
    query_parser.set_defaults(handler=run_query)

    stats_parser = commands.add_parser('stats', help='tag statistics reports')
    stats_parser.add_argument('--report', required=True, choices=['freq', 'sources', 'core', 'powerlaw', 'cooc'])
    stats_parser.add_argument('--in', dest='input', required=True)
    stats_parser.add_argument('--fold-tag-text', action='store_true')
    stats_parser.add_argument('--by-site', action='store_true')
    stats_parser.add_argument('--min-count', type=int)
    stats_parser.add_argument('--edges', type=int, nargs='+')
    stats_parser.add_argument('--axis', choices=list(cooc.AXES), default='object')
    stats_parser.add_argument('--series-out')
    stats_parser.add_argument('--plot')
    stats_parser.add_argument('--format', choices=['text', 'csv'], default='text')
    stats_parser.add_argument('--out')
    stats_parser.set_defaults(handler=run_stats)

    export_parser = commands.add_parser('export', help='convert a graph or the schema on the way out')
    export_parser.add_argument('--in', dest='input')
    export_parser.add_argument('--format', choices=['rdfxml', 'csv', 'owl', 'turtle'], default='rdfxml')
    export_parser.add_argument('--out')
    export_parser.set_defaults(handler=run_export)
    return parser


_REQUIRED_BY_SCENARIO = {'scenario1': 'tag', 'scenario2': 'object', 'scenario3': 'tagger', 'raw': 'file'}


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == 'query' and not getattr(args, _REQUIRED_BY_SCENARIO[args.scenario]):
            parser.error(f"query {args.scenario} requires --{_REQUIRED_BY_SCENARIO[args.scenario]}")
        if args.command == 'export' and args.format != 'owl' and not args.input:
            parser.error(f"export --format {args.format} requires --in")
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    level = logging.DEBUG if args.verbose else logging.INFO
    logging.basicConfig(level=level, format=LOG_FORMAT)
    logging.getLogger().setLevel(level)
    try:
        return args.handler(args)
    except HANDLED_ERRORS as e:
        logging.error(str(e))
        return 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
