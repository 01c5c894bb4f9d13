"""Sweeps over random regular graphs, written as CSV."""

from __future__ import annotations

import csv
import io
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields
from pathlib import Path
from typing import Iterable, Sequence

from .abelian import abelian_girth, structural_bound
from .certificates import Certificate, certificate_from_result, write_certificate
from .generators import random_regular
from .girth import girth
from .moore import certify_abl_upper

__all__ = ["ExperimentRow", "run_row", "run_experiment", "rows_to_csv", "worker_count"]

WORKERS_ENV = "ABLGIRTH_WORKERS"


@dataclass(frozen=True)
class ExperimentRow:
    graph_id: str
    family: str
    n: int
    d: int
    girth: int
    abl_lower: int
    abl_upper: int
    abl_exact: int | None
    moore_bound: int
    ratio_girth: float
    ratio_abl: float
    runtime_ms: float | None


FIELDNAMES = [f.name for f in fields(ExperimentRow)]


def worker_count() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw:
        return max(1, int(raw))
    return os.cpu_count() or 1


def run_row(n: int, d: int, seed: int, exact_max_n: int = 20, timing: bool = False, cert_dir: str | None = None) -> ExperimentRow:
    t0 = time.perf_counter()
    g = random_regular(n, d, seed)
    gid = f"random-regular-n{n}-d{d}-s{seed}"
    gir = int(girth(g).value)
    moore = certify_abl_upper(g, 0)
    upper = moore.bound
    exact = None
    if n <= exact_max_n:
        structural = structural_bound(g)
        if structural is not None:
            upper = min(upper, structural.bound)
        result = abelian_girth(g)
        exact = int(result.value)
        if cert_dir is not None:
            write_certificate(Path(cert_dir) / f"{gid}.abl.cert", certificate_from_result(result), [gid])
    if cert_dir is not None:
        write_certificate(Path(cert_dir) / f"{gid}.moore.cert", Certificate(moore.bound, moore), [gid])
    log = math.log(n) / math.log(d - 1)
    elapsed = (time.perf_counter() - t0) * 1000 if timing else None
    return ExperimentRow(
        graph_id=gid, family="random-regular", n=n, d=d, girth=gir, abl_lower=3 * gir,
        abl_upper=upper, abl_exact=exact, moore_bound=moore.bound,
        ratio_girth=round(gir / log, 4), ratio_abl=round(upper / log, 4), runtime_ms=elapsed,
    )


def _run_args(args):
    return run_row(*args)


def run_experiment(
    ns: Sequence[int], d: int, seeds: Iterable[int], exact_max_n: int = 20,
    timing: bool = False, cert_dir: str | None = None, workers: int | None = None,
) -> list[ExperimentRow]:
    """One row per ``(n, seed)``, in input order; rows may be computed in worker processes."""
    jobs = [(n, d, s, exact_max_n, timing, cert_dir) for n in ns for s in seeds]
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(jobs) <= 1:
        return [run_row(*j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_args, jobs))


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.4f}"
    return str(value)


def rows_to_csv(rows: Iterable[ExperimentRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(FIELDNAMES)
    for row in rows:
        writer.writerow([_cell(x) for x in astuple(row)])
    return buf.getvalue()
