import logging
import os

from store.model import new_graph
from store.turtle import parse_turtle, serialize_turtle


def merge(graphs):
    merged = new_graph()
    for graph in graphs:
        for triple in graph:
            merged.add(triple)
    return merged


def save(g, file_path):
    directory = os.path.dirname(file_path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(file_path, 'w', encoding='utf-8') as file:
        file.write(serialize_turtle(g))
    logging.info(f"Saved {len(g)} triples to {file_path}")


def load(file_path):
    with open(file_path, 'r', encoding='utf-8') as file:
        graph = parse_turtle(file.read())
    logging.info(f"Loaded {len(graph)} triples from {file_path}")
    return graph
