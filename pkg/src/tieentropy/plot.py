"""SVG rendering of already-computed CSV results."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .io import read_csv  # noqa: E402

# fixed ids and no date stamp, so identical data gives identical files
plt.rcParams["svg.hashsalt"] = "tieentropy"
_SVG_META = {"Date": None, "Creator": None}


def _save(fig, path) -> None:
    fig.savefig(path, format="svg", metadata=_SVG_META)
    plt.close(fig)


def plot_sweep(aggregate_csv, path, title: str | None = None) -> None:
    cols = read_csv(aggregate_csv, "aggregate")
    fig, ax = plt.subplots(figsize=(5, 4))
    for key, style in (("max", "^-"), ("mean", "o-"), ("min", "v-")):
        (line,) = ax.plot(cols["c_ij"], cols[key], style, ms=3, label=key)
        line.set_gid(f"series-{key}")
    ax.axhline(0.0, color="grey", lw=0.5)
    ax.set_xlabel("common friends $c_{ij}$")
    ax.set_ylabel(r"$\Delta\epsilon(i,j)$")
    ax.legend()
    if title:
        ax.set_title(title)
    _save(fig, path)


def plot_curve(curve_csvs, path, labels=None) -> None:
    fig, ax = plt.subplots(figsize=(5, 4))
    for k, f in enumerate(curve_csvs):
        cols = read_csv(f, "curve")
        label = labels[k] if labels else Path(f).stem
        (line,) = ax.plot(cols["clustering"], cols["tau"], "o-", ms=4, label=label)
        line.set_gid(f"series-{k}")
    ax.set_xlabel("clustering $c$")
    ax.set_ylabel(r"positiveness $\tau$")
    ax.legend()
    _save(fig, path)


def plot_cdf(cdf_csvs, path, labels=None) -> None:
    fig, ax = plt.subplots(figsize=(5, 4))
    for k, f in enumerate(cdf_csvs):
        cols = read_csv(f, "cdf")
        label = labels[k] if labels else Path(f).stem
        (line,) = ax.step([0.0, *cols["w"]], [0.0, *cols["cum_frac"]], where="post", label=label)
        line.set_gid(f"series-{k}")
    ax.set_xlabel("tie strength $w_{ij}$")
    ax.set_ylabel("CDF")
    ax.set_xlim(0, 1)
    ax.legend(loc="lower right")
    _save(fig, path)


PLOTTERS = {"sweep": plot_sweep, "curve": plot_curve, "cdf": plot_cdf}


def plot(kind: str, inputs, path, labels=None) -> None:
    if kind == "sweep":
        if len(inputs) != 1:
            raise ValueError("sweep plots take exactly one aggregate CSV")
        plot_sweep(inputs[0], path)
    else:
        PLOTTERS[kind](inputs, path, labels)
