"""
Exhaustive sweeps over S_n, one JSON line per permutation.

Records are produced by a worker pool but written in lexicographic order by a
single writer, so the file is byte-identical for any worker count.  Timings
are left out of the file unless asked for, since they would break that.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import asdict, dataclass
from multiprocessing import Pool
from pathlib import Path

from . import analysis, groth, zeroone
from .perm import Permutation, enumerate_sn

__all__ = [
    "ALL_CHECKS",
    "LORENTZIAN_MAX_N",
    "ScanRecord",
    "ScanSummary",
    "scan_one",
    "run_scan",
    "default_workers",
]

ALL_CHECKS = ("zeroone", "engines", "conjectures", "lorentzian", "factorization")
ENGINE_SCAN_MAX_N = 5
LORENTZIAN_MAX_N = 4
WORKERS_ENV = "GROTHKIT_WORKERS"


@dataclass
class ScanRecord:
    perm: str
    n: int
    length: int
    degree_d: int
    zero_one_patterns: bool
    zero_one_coeffs: bool
    schubert_zero_one_patterns: bool
    schubert_zero_one_coeffs: bool
    engines_agree: bool | None
    conj_1_1: str | None
    conj_1_2: str | None
    conj_1_6: str | None
    lorentzian: str
    factorization_verified: bool | None
    wall_time_ms: float | None

    def failures(self) -> list[str]:
        """Theorem-level violations; conjecture failures outside zero-one are report-only."""
        out = []
        if self.zero_one_patterns != self.zero_one_coeffs:
            out.append("six-pattern theorem")
        if self.schubert_zero_one_patterns != self.schubert_zero_one_coeffs:
            out.append("twelve-pattern theorem")
        if self.engines_agree is False:
            out.append("engines")
        if self.lorentzian == "fail":
            out.append("lorentzian")
        if self.zero_one_patterns:
            if self.factorization_verified is False:
                out.append("factorization")
            for name in ("conj_1_1", "conj_1_2", "conj_1_6"):
                if getattr(self, name) == "fail":
                    out.append(name)
        return out

    def to_line(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))


def _pf(v) -> str:
    return "pass" if v else "fail"


def scan_one(args) -> ScanRecord:
    text, checks, timing = args
    t0 = time.perf_counter()
    w = Permutation.parse(text)
    G = groth.grothendieck_dd(w)
    g = zeroone.classify_groth(w, strict=False)
    s = zeroone.classify_schubert(w, strict=False)
    zo = g.by_patterns

    engines = None
    if "engines" in checks and w.n <= ENGINE_SCAN_MAX_N:
        engines = all(
            groth.grothendieck_bpd(w, v) == groth.grothendieck_dd(w, v) for v in (groth.SINGLE, groth.DOUBLE)
        )

    conj = [None, None, None]
    if "conjectures" in checks:
        conj = [_pf(v) for v in analysis.conjecture_checks(w)]

    lorentzian = "skipped"
    if "lorentzian" in checks and zo and w.n <= LORENTZIAN_MAX_N:
        lorentzian = _pf(analysis.check_lorentzian_theorem(w))

    factored = None
    if "factorization" in checks and zo:
        try:
            factored = zeroone.factorize(w).product_verified
        except zeroone.FactorizationMismatch:
            factored = False

    ms = round((time.perf_counter() - t0) * 1000, 3) if timing else None
    return ScanRecord(
        str(w), w.n, w.length(), G.degree(),
        zo, g.by_coefficients.zero_one,
        s.by_patterns, s.by_coefficients.zero_one,
        engines, *conj, lorentzian, factored, ms,
    )


@dataclass
class ScanSummary:
    total: int
    zero_one: int
    failures: list[tuple[str, list[str]]]
    skipped: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} total={self.total} zero_one={self.zero_one} failures={len(self.failures)} resumed={self.skipped}"


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _load_existing(path: Path) -> list[dict]:
    """Complete records already in the file; a torn last line is dropped."""
    if not path.exists():
        return []
    good = []
    for line in path.read_text(encoding="utf-8").splitlines():
        try:
            good.append(json.loads(line))
        except json.JSONDecodeError:
            break
    path.write_text("".join(json.dumps(r, separators=(",", ":")) + "\n" for r in good), encoding="utf-8")
    return good


def run_scan(n: int, checks=ALL_CHECKS, out: Path | str | None = None, workers: int | None = None,
             resume: bool = False, timing: bool = False) -> tuple[ScanSummary, list[ScanRecord]]:
    if not 1 <= n <= 7:
        raise ValueError(f"scan supports 1 <= n <= 7, got {n}")
    unknown = set(checks) - set(ALL_CHECKS)
    if unknown:
        raise ValueError(f"unknown checks {sorted(unknown)}")
    checks = tuple(c for c in ALL_CHECKS if c in checks)
    workers = workers or default_workers()
    path = Path(out) if out else None

    done: set[str] = set()
    if path and resume:
        done = {r["perm"] for r in _load_existing(path)}
    elif path:
        path.write_text("", encoding="utf-8")

    todo = [str(w) for w in enumerate_sn(n) if str(w) not in done]
    jobs = [(t, checks, timing) for t in todo]
    records: list[ScanRecord] = []
    sink = path.open("a", encoding="utf-8", newline="\n") if path else None
    try:
        if workers > 1 and len(jobs) > 1:
            with Pool(workers) as pool:
                stream = pool.imap(scan_one, jobs, chunksize=max(1, len(jobs) // (8 * workers)))
                for rec in stream:
                    records.append(rec)
                    if sink:
                        sink.write(rec.to_line() + "\n")
        else:
            for job in jobs:
                rec = scan_one(job)
                records.append(rec)
                if sink:
                    sink.write(rec.to_line() + "\n")
    finally:
        if sink:
            sink.close()

    failures = [(r.perm, r.failures()) for r in records if r.failures()]
    summary = ScanSummary(len(records), sum(r.zero_one_patterns for r in records), failures, len(done))
    return summary, records
