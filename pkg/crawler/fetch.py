import logging
import os
import threading
import time
from typing import Protocol

import requests
import yaml


class FetchError(Exception):
    def __init__(self, url, cause):
        super().__init__(f"Failed to fetch {url}: {cause}")
        self.url = url
        self.cause = cause


class Fetcher(Protocol):
    def fetch(self, url: str) -> str:
        ...


class FixtureFetcher:
    """Serves pages from a fixture directory whose manifest.yaml maps URL -> HTML file."""

    def __init__(self, fixtures_dir):
        self.fixtures_dir = fixtures_dir
        manifest_path = os.path.join(fixtures_dir, 'manifest.yaml')
        try:
            with open(manifest_path, 'r', encoding='utf-8') as file:
                self.manifest = yaml.safe_load(file) or {}
        except FileNotFoundError as e:
            raise FetchError(manifest_path, 'fixture manifest not found') from e
        self._lock = threading.Lock()
        self.fetched = []

    def fetch(self, url):
        with self._lock:
            self.fetched.append(url)
        if url not in self.manifest:
            raise FetchError(url, 'not in fixture manifest')
        with open(os.path.join(self.fixtures_dir, self.manifest[url]), 'r', encoding='utf-8') as file:
            return file.read()


class LiveFetcher:
    headers = {
        'User-Agent': 'Mozilla/5.0 (Windows NT 10.0; Win64; x64) AppleWebKit/537.36 (KHTML, like Gecko) Chrome/91.0.4472.124 Safari/537.36',
        'Accept-Language': 'en-US,en;q=0.9',
        'Accept': 'text/html,application/xhtml+xml,application/xml;q=0.9,*/*;q=0.8',
        'Connection': 'keep-alive',
    }

    def __init__(self, retries=3, delay=5, timeout=30, politeness_delay=0.0):
        self.retries = retries
        self.delay = delay
        self.timeout = timeout
        self.politeness_delay = politeness_delay

    def fetch(self, url):
        if self.politeness_delay:
            time.sleep(self.politeness_delay)
        attempt = 0
        cause = None
        while attempt < self.retries:
            try:
                response = requests.get(url, headers=self.headers, timeout=self.timeout)
                response.raise_for_status()
                return response.text
            except requests.exceptions.RequestException as e:
                cause = e
                attempt += 1
                logging.warning(f"Request failed for {url}: {e}. Retrying in {self.delay} seconds...")
                if attempt < self.retries:
                    time.sleep(self.delay)
        raise FetchError(url, cause)
