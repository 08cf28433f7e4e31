import os

from rdflib import Namespace

from utils.load import load_mappings_from_yaml

_uto_settings = load_mappings_from_yaml(os.path.join('settings', 'uto.yaml'))

UTO = Namespace(_uto_settings['base_namespace'])
TAGGING_BASE = _uto_settings['tagging_base']

# Fixed prefixes, always declared by the Turtle writer.
PREFIXES = {'uto': str(UTO), **_uto_settings['namespaces']}


def expand_curie(value):
    """Expand 'prefix:local' against PREFIXES; full IRIs pass through."""
    prefix, sep, local = value.partition(':')
    if sep and prefix in PREFIXES and not local.startswith('//'):
        return PREFIXES[prefix] + local
    return value
