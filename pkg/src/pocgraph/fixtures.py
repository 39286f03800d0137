"""Bundled WPOC fixture instances used by the self-test suite."""

from __future__ import annotations

from importlib import resources

from .graph_core import WeightedGraph, parse_wpoc

FIXTURE_NAMES = ("C4W", "CHEM", "K135", "P3W")


def fixture_text(name: str) -> str:
    if name not in FIXTURE_NAMES:
        raise KeyError(f"unknown fixture {name!r} (have: {', '.join(FIXTURE_NAMES)})")
    return (resources.files("pocgraph.data") / f"{name}.wpoc").read_text()


def load_fixture(name: str) -> WeightedGraph:
    return parse_wpoc(fixture_text(name))
