import os
import yaml
import pandas as pd


def project_root():
    return os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def load_csv(file_path):
    return pd.read_csv(file_path, dtype=str, keep_default_na=False)


def load_mappings_from_yaml(filename):
    file_path = os.path.join(project_root(), filename)
    with open(file_path, 'r', encoding='utf-8') as file:
        mappings = yaml.safe_load(file)
    return mappings or {}


def load_site_settings(site):
    sites = load_mappings_from_yaml(os.path.join('settings', 'sites.yaml'))
    if site not in sites:
        raise ValueError(f"No site settings found for: {site}")
    return sites[site]


def load_analysis_settings():
    return load_mappings_from_yaml(os.path.join('settings', 'analysis.yaml'))


def site_names():
    return list(load_mappings_from_yaml(os.path.join('settings', 'sites.yaml')).keys())
