"""Edge-list ingestion, dataset manifest, and CSV serialization."""

from __future__ import annotations

import csv
import gzip
import hashlib
import json
import logging
import os
import shutil
import urllib.request
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .experiments import Bucket, PositivenessReport, Sweep
from .graph import Graph, GraphError

log = logging.getLogger(__name__)

DATA_DIR_ENV = "TIEENTROPY_DATA"

SCHEMAS = {
    "sweep": ["i", "j", "c_ij", "delta_pair"],
    "aggregate": ["c_ij", "count", "min", "mean", "max"],
    "cdf": ["w", "cum_frac"],
    "positiveness": ["tau", "positive", "total", "clustering"],
    "curve": ["knob", "clustering", "tau"],
}


class FormatError(ValueError):
    """Malformed input file."""


class SchemaError(FormatError):
    """CSV columns do not match the declared kind."""


def _open_text(path: Path):
    if path.suffix == ".gz":
        return gzip.open(path, "rt", encoding="utf-8")
    return open(path, encoding="utf-8")


def load_edge_list(path: str | os.PathLike, fmt: str = "snap_tsv") -> tuple[Graph, list[str]]:
    """Read an edge list as a simple undirected graph.

    ``snap_tsv``: whitespace-separated pairs, ``#`` comments. ``csv_pairs``:
    comma-separated pairs. Extra columns (timestamps, weights) are ignored.
    Self-loops are dropped, and so are nodes that appear only in them;
    reciprocal and repeated pairs collapse to one edge. Node ids are dense
    and follow label order (numeric when every label is an integer); the
    second return value maps id to original label.
    """
    path = Path(path)
    if fmt not in ("snap_tsv", "csv_pairs"):
        raise FormatError(f"unknown edge-list format {fmt!r}")
    pairs: list[tuple[str, str]] = []
    seen_line = False
    with _open_text(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#") or line.startswith("%"):
                continue
            parts = line.split(",") if fmt == "csv_pairs" else line.split()
            if len(parts) < 2 or not parts[0].strip() or not parts[1].strip():
                raise FormatError(f"{path}:{lineno}: expected two node labels, got {line!r}")
            seen_line = True
            a, b = parts[0].strip(), parts[1].strip()
            if a != b:
                pairs.append((a, b))
    if not seen_line:
        raise FormatError(f"{path}: no edges found")
    labels = sorted({x for pair in pairs for x in pair})
    try:
        labels.sort(key=int)
    except ValueError:
        pass
    ids = {lab: k for k, lab in enumerate(labels)}
    adj: list[set[int]] = [set() for _ in labels]
    for a, b in pairs:
        u, v = ids[a], ids[b]
        adj[u].add(v)
        adj[v].add(u)
    return Graph.from_adjacency_sets(adj), labels


def save_edge_list(g: Graph, path: str | os.PathLike) -> None:
    """Write ``i<TAB>j`` per edge with ``i < j``, sorted, after a header comment.

    Isolated nodes cannot be represented; the header records the node count.
    """
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"# nodes={g.node_count} edges={g.edge_count}\n")
        for i, j in g.edges():
            fh.write(f"{i}\t{j}\n")


def load_canonical(path: str | os.PathLike) -> Graph:
    """Read a file written by ``save_edge_list`` keeping integer ids as-is."""
    n = None
    edges = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if line.startswith("#"):
                for tok in line[1:].split():
                    if tok.startswith("nodes="):
                        n = int(tok[6:])
                continue
            if not line.strip():
                continue
            try:
                a, b = line.split()
                edges.append((int(a), int(b)))
            except ValueError:
                raise FormatError(f"{path}:{lineno}: malformed line {line.rstrip()!r}") from None
    if n is None:
        n = max((max(e) for e in edges), default=-1) + 1
    adj: list[set[int]] = [set() for _ in range(n)]
    for a, b in edges:
        if a == b or not (0 <= a < n and 0 <= b < n):
            raise FormatError(f"{path}: bad edge ({a}, {b})")
        adj[a].add(b)
        adj[b].add(a)
    return Graph.from_adjacency_sets(adj)


def read_graph(path: str | os.PathLike) -> Graph:
    """Canonical files keep their ids; anything else goes through ``load_edge_list``."""
    path = Path(path)
    if path.suffix != ".gz":
        with open(path, encoding="utf-8") as fh:
            first = fh.readline()
        if first.startswith("# nodes="):
            return load_canonical(path)
    fmt = "csv_pairs" if path.suffix == ".csv" else "snap_tsv"
    return load_edge_list(path, fmt)[0]


# -- CSV -------------------------------------------------------------------

def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _write_rows(path, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def write_sweep_csv(sweep: Sweep, path) -> None:
    _write_rows(
        path,
        SCHEMAS["sweep"],
        (
            (int(a), int(b), int(c), _fmt(d))
            for a, b, c, d in zip(sweep.i, sweep.j, sweep.c_ij, sweep.delta_pair)
        ),
    )


def write_aggregate_csv(buckets: list[Bucket], path) -> None:
    if not buckets:
        raise GraphError("empty aggregate")
    _write_rows(
        path,
        SCHEMAS["aggregate"],
        ((b.c_ij, b.count, _fmt(b.min), _fmt(b.mean), _fmt(b.max)) for b in buckets),
    )


def write_cdf_csv(cdf: list[tuple[float, float]], path) -> None:
    if not cdf:
        raise GraphError("empty CDF")
    _write_rows(path, SCHEMAS["cdf"], ((_fmt(w), _fmt(f)) for w, f in cdf))


def write_positiveness_csv(rep: PositivenessReport, path) -> None:
    _write_rows(
        path,
        SCHEMAS["positiveness"],
        [(_fmt(rep.tau), rep.positive_count, rep.total, _fmt(rep.clustering))],
    )


def write_curve_csv(rows: list[tuple[float, float, float]], path) -> None:
    if not rows:
        raise GraphError("empty curve")
    _write_rows(path, SCHEMAS["curve"], ((_fmt(k), _fmt(c), _fmt(t)) for k, c, t in rows))


def read_csv(path, kind: str) -> dict[str, list[float]]:
    """Columns of a CSV written by this module, checked against ``kind``'s schema."""
    expected = SCHEMAS[kind]
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            raise FormatError(f"{path}: empty file")
        for col in expected:
            if col not in header:
                raise SchemaError(f"{path}: missing column {col!r} for {kind} data")
        cols: dict[str, list[float]] = {c: [] for c in header}
        for row in reader:
            for c, v in zip(header, row):
                cols[c].append(float(v))
    return cols


def read_sweep_csv(path) -> Sweep:
    import numpy as np

    cols = read_csv(path, "sweep")
    return Sweep(
        np.array(cols["i"], dtype=np.int64),
        np.array(cols["j"], dtype=np.int64),
        np.array(cols["c_ij"], dtype=np.int64),
        np.array(cols["delta_pair"], dtype=float),
    )


# -- datasets --------------------------------------------------------------

@dataclass(frozen=True)
class DatasetEntry:
    name: str
    url: str
    filename: str
    expected_nodes: int
    expected_edges: int
    count_tolerance: float = 0.0
    checksum: str | None = None
    fmt: str = "snap_tsv"


def load_manifest(path: str | os.PathLike | None = None) -> dict[str, DatasetEntry]:
    if path is None:
        text = resources.files("tieentropy").joinpath("datasets.json").read_text()
    else:
        text = Path(path).read_text()
    return {d["name"]: DatasetEntry(**d) for d in json.loads(text)["datasets"]}


def data_dir() -> Path:
    return Path(os.environ.get(DATA_DIR_ENV, "data"))


def dataset_path(name: str, manifest: dict[str, DatasetEntry] | None = None) -> Path | None:
    """Local path of a dataset file, or ``None`` when it has not been fetched."""
    entry = (manifest or load_manifest())[name]
    p = data_dir() / entry.filename
    return p if p.exists() else None


def fetch_dataset(name: str, manifest: dict[str, DatasetEntry] | None = None) -> Path:
    entry = (manifest or load_manifest())[name]
    target = data_dir() / entry.filename
    target.parent.mkdir(parents=True, exist_ok=True)
    log.info("fetching %s from %s", name, entry.url)
    with urllib.request.urlopen(entry.url) as resp, open(target, "wb") as fh:
        shutil.copyfileobj(resp, fh)
    if entry.checksum:
        digest = hashlib.sha256(target.read_bytes()).hexdigest()
        if digest != entry.checksum:
            target.unlink()
            raise FormatError(f"{name}: checksum mismatch ({digest})")
    return target


def check_counts(g: Graph, entry: DatasetEntry) -> bool:
    tol = entry.count_tolerance
    ok_n = abs(g.node_count - entry.expected_nodes) <= tol * entry.expected_nodes
    ok_e = abs(g.edge_count - entry.expected_edges) <= tol * entry.expected_edges
    return ok_n and ok_e
