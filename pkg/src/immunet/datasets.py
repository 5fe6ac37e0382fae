"""Bundled and locally supplied benchmark graphs."""
from __future__ import annotations

import os
from importlib import resources
from pathlib import Path

from .graph import Graph, parse_edge_list, read_edge_list

OREGON_FILES = ("oregon1_010331.txt", "oregon1_010331.txt.gz")


def karate() -> Graph:
    """Zachary's karate club (34 vertices, 78 edges), labels ``1..34``."""
    return parse_edge_list(resources.files("immunet").joinpath("data/karate.txt").read_bytes())


def oregon_path() -> Path | None:
    """Locate the SNAP Oregon-1 AS graph (2001-03-31 snapshot).

    Looks at ``$IMMUNET_OREGON`` first, then for ``oregon1_010331.txt[.gz]``
    in ``$IMMUNET_DATA`` and in ``./data``.
    """
    env = os.environ.get("IMMUNET_OREGON")
    if env:
        return Path(env) if Path(env).is_file() else None
    dirs = [os.environ.get("IMMUNET_DATA"), "data", Path(__file__).resolve().parents[2] / "data"]
    for d in dirs:
        if not d:
            continue
        for name in OREGON_FILES:
            p = Path(d) / name
            if p.is_file():
                return p
    return None


def oregon() -> Graph:
    p = oregon_path()
    if p is None:
        raise FileNotFoundError(
            "Oregon AS graph not found; download oregon1_010331.txt.gz from "
            "https://snap.stanford.edu/data/oregon1.html into ./data or set IMMUNET_OREGON")
    return read_edge_list(p)


BUILTIN = {"karate": karate, "oregon": oregon}
