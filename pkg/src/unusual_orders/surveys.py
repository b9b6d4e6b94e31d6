"""Range sweeps: the census of unusual orders by discriminant, the search for
d dividing the second unit coordinate, and per-d attribute tables.

Long sweeps split the d-range into contiguous chunks, optionally run them in
worker processes, and merge the results in chunk order, so the output never
depends on the number of workers.  A result log (JSON lines, integers as
decimal strings) receives every record plus a checkpoint after each chunk;
a resumed run skips everything up to the last checkpoint.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Callable, Iterable, Iterator

from . import config
from .arith import field_data, squarefree_upto
from .class_numbers import class_number, picard_order
from .contfrac import fundamental_unit, power_coords, unit_coords_mod, unit_norm
from .unusual import type_form, unusual_conductors, reduced_unusual_conductors

LOG_FIELDS = ("kind", "d", "f", "disc", "type", "form", "beta", "t", "unit_norm", "class_number")


@dataclass(frozen=True)
class CensusRecord:
    d: int
    f: int
    disc: int
    type: int | None
    form: int | None


@dataclass(frozen=True)
class SearchHit:
    d: int
    v_divisible: bool
    v3_divisible: bool
    beta: int
    t: int
    unit_norm: int
    class_number: int


# ---------------------------------------------------------------------------
# result log


def encode_record(kind: str, **fields) -> str:
    """One JSON line; integers become decimal strings, None fields are dropped."""
    rec = {"kind": kind}
    for key in LOG_FIELDS[1:]:
        value = fields.get(key)
        if value is None:
            continue
        rec[key] = str(int(value)) if isinstance(value, (bool, int)) else value
    unknown = set(fields) - set(LOG_FIELDS)
    if unknown:
        raise ValueError(f"unknown log fields {sorted(unknown)}")
    return json.dumps(rec, sort_keys=False)


def decode_record(line: str) -> dict:
    rec = json.loads(line)
    return {k: (v if k == "kind" else int(v)) for k, v in rec.items()}


class ResultLog:
    """Append-only JSON-lines log owned by the merging process."""

    def __init__(self, path: str | None, resume: bool = False):
        self.path = path
        self.previous: list[dict] = []
        self.resume_after = None
        if path and resume and os.path.exists(path):
            with open(path) as fh:
                lines = [ln for ln in fh.read().splitlines() if ln.strip()]
            records = [decode_record(ln) for ln in lines]
            last = max((i for i, r in enumerate(records) if r["kind"] == "checkpoint"), default=None)
            if last is not None:
                self.resume_after = records[last]["d"]
                self.previous = [r for r in records[:last] if r["kind"] != "checkpoint"]
                # drop records written after the last checkpoint; they will be redone
                with open(path, "w") as fh:
                    fh.write("\n".join(lines[: last + 1]) + "\n")
        elif path:
            open(path, "w").close()
        self._fh = open(path, "a") if path else None

    def write(self, lines: Iterable[str]):
        if self._fh:
            for line in lines:
                self._fh.write(line + "\n")
            self._fh.flush()

    def close(self):
        if self._fh:
            self._fh.close()


def _chunks(lo: int, hi: int, size: int) -> list[tuple[int, int]]:
    return [(a, min(a + size - 1, hi)) for a in range(lo, hi + 1, size)]


def _run_chunks(worker: Callable, args: list[tuple], jobs: int) -> Iterator:
    if jobs <= 1:
        for a in args:
            yield worker(a)
        return
    with Pool(jobs) as pool:
        yield from pool.imap(worker, args)


# ---------------------------------------------------------------------------
# census


def _census_chunk(args) -> list[CensusRecord]:
    lo, hi, max_disc = args
    out = []
    for d in squarefree_upto(hi, lo):
        fd = field_data(d)
        if fd.t not in (2, 3):  # |Pic(O_K)| = 2 forces t in {2, 3}
            continue
        if fd.ramified[0] ** 2 * fd.d_K > max_disc:
            continue
        if class_number(fd) != 2:
            continue
        bound = math.isqrt(max_disc // fd.d_K)
        conductors = unusual_conductors(fd, bound)
        if not conductors:
            continue
        tf = type_form(fd, reduced_unusual_conductors(fd))
        for f in conductors:
            out.append(CensusRecord(d, f, f * f * fd.d_K, *(tf or (None, None))))
    return out


def census(
    max_disc: int,
    jobs: int = 1,
    log_path: str | None = None,
    resume: bool = False,
    chunk: int = 5000,
) -> list[CensusRecord]:
    """All (d, f) with f in D_d and f^2 d_K <= max_disc, sorted by discriminant."""
    if max_disc < 1:
        raise ValueError("max_disc must be >= 1")
    log = ResultLog(log_path, resume)
    records = [
        CensusRecord(r["d"], r["f"], r["disc"], r.get("type"), r.get("form"))
        for r in log.previous
        if r["kind"] == "census"
    ]
    # the smallest conductor is 2, so d_K <= max_disc/4 and d <= max_disc/4
    hi = max_disc // 4
    start = 2 if log.resume_after is None else log.resume_after + 1
    ranges = _chunks(start, hi, chunk)
    try:
        for (lo, top), recs in zip(ranges, _run_chunks(_census_chunk, [(a, b, max_disc) for a, b in ranges], jobs)):
            records.extend(recs)
            log.write(
                [encode_record("census", d=r.d, f=r.f, disc=r.disc, type=r.type, form=r.form) for r in recs]
                + [encode_record("checkpoint", d=top)]
            )
    finally:
        log.close()
    return sorted(records, key=lambda r: (r.disc, r.d, r.f))


# ---------------------------------------------------------------------------
# d | v search


def attribute_table(d: int, v_divisible: bool | None = None, v3_divisible: bool | None = None) -> SearchHit:
    fd = field_data(d)
    if v_divisible is None or v3_divisible is None:
        u, v, _, _ = unit_coords_mod(fd, d)
        v_divisible = v == 0
        v3_divisible = power_coords(fd, (u, v), 3, d)[1] == 0
    return SearchHit(
        d=d,
        v_divisible=v_divisible,
        v3_divisible=v3_divisible,
        beta=d % 8,
        t=fd.t,
        unit_norm=unit_norm(fd),
        class_number=class_number(fd),
    )


def _search_chunk(args) -> list[tuple[str, int]]:
    lo, hi = args
    out = []
    for d in squarefree_upto(hi, lo):
        fd = field_data(d)
        try:
            u, v, _, _ = unit_coords_mod(fd, d)
        except config.BudgetExceeded:
            out.append(("budget-exceeded", d))
            continue
        if v == 0:
            out.append(("search-v", d))
        elif d % 3 == 0 and power_coords(fd, (u, v), 3, d)[1] == 0:
            out.append(("search-v3", d))
    return out


def search_d_divides_v(
    max_d: int,
    jobs: int = 1,
    log_path: str | None = None,
    resume: bool = False,
    chunk: int = 10000,
    verify: bool = True,
) -> tuple[list[SearchHit], list[int], list[int]]:
    """Squarefree d <= max_d with d | v, where eps = u + v*omega.

    Returns (hits, cube_only, budget_failures): ``cube_only`` lists d with 3 | d
    that divide the second coordinate of eps^3 but not of eps.
    """
    if max_d < 2:
        raise ValueError("max_d must be >= 2")
    log = ResultLog(log_path, resume)
    found = [(r["kind"], r["d"]) for r in log.previous if r["kind"] != "checkpoint"]
    start = 2 if log.resume_after is None else log.resume_after + 1
    ranges = _chunks(start, max_d, chunk)
    try:
        for (lo, top), items in zip(ranges, _run_chunks(_search_chunk, ranges, jobs)):
            found.extend(items)
            lines = []
            for kind, d in items:
                if kind == "search-v":
                    h = attribute_table(d, True, True)
                    lines.append(encode_record(kind, d=d, beta=h.beta, t=h.t, unit_norm=h.unit_norm,
                                               class_number=h.class_number))
                else:
                    lines.append(encode_record(kind, d=d))
            log.write(lines + [encode_record("checkpoint", d=top)])
    finally:
        log.close()
    hits = []
    for kind, d in found:
        if kind != "search-v":
            continue
        if verify:
            eps = fundamental_unit(field_data(d))
            if eps.v % d:
                raise ArithmeticError(f"modular search reported d = {d}, exact unit disagrees")
        hits.append(attribute_table(d, True, True))
    cube_only = [d for kind, d in found if kind == "search-v3"]
    failures = [d for kind, d in found if kind == "budget-exceeded"]
    return hits, cube_only, failures


def ramified_pic_check(d: int) -> dict[int, bool]:
    """For each ramified p: whether |Pic(O_p)| = |Pic(O_K)|."""
    fd = field_data(d)
    h = class_number(fd)
    return {p: picard_order(fd, p).pic == h for p in fd.ramified}
