"""Reconstruction metrics, scheme comparison tables, and histogram utilities."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

import numpy as np

from .audio import DigitalAudio
from .schemes import SCHEMES, ResourceReport, resource_report


@dataclass(frozen=True, eq=False)
class ReconstructionReport:
    """Error metrics of a reconstructed signal against its reference.

    ``snr_db`` is 10*log10(sum ref^2 / sum err^2); a silent reference makes
    it undefined (None) rather than +-inf. ``unobserved`` carries per-index
    warning flags from the decoder when available.
    """

    max_abs_error: float
    mean_squared_error: float
    snr_db: float | None
    scheme: str | None = None
    shots: int | None = None
    unobserved: np.ndarray | None = None

    def text(self) -> str:
        lines = []
        if self.scheme:
            lines.append(f"scheme: {self.scheme}")
        if self.shots is not None:
            lines.append(f"shots: {self.shots}")
        lines.append(f"max_abs_error: {self.max_abs_error!r}")
        lines.append(f"mean_squared_error: {self.mean_squared_error!r}")
        snr = "undefined" if self.snr_db is None else f"{self.snr_db:.4f} dB"
        lines.append(f"snr: {snr}")
        if self.unobserved is not None:
            flagged = int(np.count_nonzero(self.unobserved))
            lines.append(f"unobserved_indexes: {flagged}")
        return "\n".join(lines)


def compare(
    reference: DigitalAudio,
    reconstructed: DigitalAudio,
    scheme: str | None = None,
    shots: int | None = None,
    unobserved: np.ndarray | None = None,
) -> ReconstructionReport:
    if reference.samples.shape != reconstructed.samples.shape:
        raise ValueError(
            f"shape mismatch: {reference.samples.shape} vs {reconstructed.samples.shape}"
        )
    err = reconstructed.samples - reference.samples
    mse = float(np.mean(err**2))
    ref_power = float(np.sum(reference.samples**2))
    if ref_power == 0.0:
        snr = None
    elif mse == 0.0:
        snr = math.inf
    else:
        snr = 10.0 * math.log10(ref_power / float(np.sum(err**2)))
    return ReconstructionReport(
        float(np.max(np.abs(err))), mse, snr, scheme, shots, unobserved
    )


def scheme_comparison_table(
    n_samples: int, depth: int, channels: int = 1
) -> list[ResourceReport]:
    """One resource row per scheme at the given sizes."""
    rows = []
    for scheme in SCHEMES:
        c = channels if scheme in ("mqsm", "msqpam") else 1
        rows.append(resource_report(scheme, n_samples, depth, c))
    return rows


def comparison_text(rows: list[ResourceReport]) -> str:
    header = ("scheme", "qubits", "value_setting_ops", "basic_instructions", "complexity", "retrieval")
    table = [header] + [
        (
            r.scheme,
            str(r.qubits),
            str(r.value_setting_ops),
            str(r.basic_instructions),
            r.complexity_class,
            r.retrieval,
        )
        for r in rows
    ]
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in table]
    return "\n".join(lines)


def comparison_csv(rows: list[ResourceReport]) -> str:
    out = ["scheme,qubits,value_setting_ops,basic_instructions,complexity,retrieval"]
    for r in rows:
        out.append(
            f"{r.scheme},{r.qubits},{r.value_setting_ops},{r.basic_instructions},"
            f'"{r.complexity_class}",{r.retrieval}'
        )
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Histogram utilities


def histogram_to_csv(counts_or_hist) -> str:
    """Serialize a histogram as ``outcome,count`` rows, keys quoted and in
    lexicographic order. Output bytes are deterministic for a fixed input."""
    counts = getattr(counts_or_hist, "counts", counts_or_hist)
    lines = ["outcome,count"]
    for key in sorted(counts):
        value = counts[key]
        text = str(value) if isinstance(value, int) else repr(float(value))
        lines.append(f'"{key}",{text}')
    return "\n".join(lines) + "\n"


def histogram_from_csv(text: str) -> dict[str, float]:
    """Parse :func:`histogram_to_csv` output. Integer counts stay ints."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header != ["outcome", "count"]:
        raise ValueError(f"expected 'outcome,count' header, got {header}")
    counts: dict[str, float] = {}
    for row in reader:
        if not row:
            continue
        if len(row) != 2:
            raise ValueError(f"bad histogram row: {row}")
        key, value = row
        if key and any(c not in "01" for c in key):
            raise ValueError(f"outcome {key!r} is not a bitstring")
        counts[key] = int(value) if value.isdigit() else float(value)
    return counts


def plot_histogram(counts_or_hist, path) -> None:
    """Render the histogram as a bar chart (SVG by default).

    Output is deterministic: bars are sorted lexicographically and the SVG
    hash salt and date metadata are pinned.
    """
    import matplotlib

    matplotlib.use("Agg", force=False)
    from matplotlib import pyplot as plt

    counts = getattr(counts_or_hist, "counts", counts_or_hist)
    keys = sorted(counts)
    values = [counts[k] for k in keys]
    with plt.rc_context({"svg.hashsalt": "qaudio"}):
        fig, ax = plt.subplots(figsize=(max(4.0, 0.4 * len(keys)), 3.0))
        ax.bar(range(len(keys)), values, color="#4878cf")
        ax.set_xticks(range(len(keys)))
        ax.set_xticklabels(keys, rotation=90, fontsize=7)
        ax.set_xlabel("outcome")
        ax.set_ylabel("count")
        fig.tight_layout()
        fig.savefig(path, metadata={"Date": None})
        plt.close(fig)
