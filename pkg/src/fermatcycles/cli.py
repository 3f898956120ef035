"""Command-line front end.

Every subcommand writes one JSON report (stdout, or ``--out``).  Exit codes:
0 when every check passes, 1 when a mathematical check fails, 2 on invalid
input or when an enumeration would exceed ``--max-enum``.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Sequence

from fermatcycles import chow, cuspdiv, kunneth
from fermatcycles.errors import CapacityError, FermatError
from fermatcycles.fermat import (
    DEFAULT_MAX_ENUM,
    FermatParams,
    expected_size_A,
    griffiths_hodge_number,
    hodge_histogram,
    set_A,
    set_B,
)
from fermatcycles.report import ResultCache, atomic_write, build_report, dumps
from fermatcycles.splitting import build_model, verify_split

log = logging.getLogger("fermatcycles")

COMMANDS = (
    "decompose",
    "split-check",
    "cusp-class-group",
    "torsion-order",
    "verify-triangle",
    "modified-diagonal",
    "all-checks",
)


def int_list(text: str) -> list[int]:
    """Parse ``"3"``, ``"1,3,5"`` or an inclusive range ``"3:8"`` (mixable with commas)."""
    out: list[int] = []
    for part in filter(None, (p.strip() for p in str(text).split(","))):
        if ":" in part:
            lo, hi = (int(x) for x in part.split(":"))
            if hi < lo:
                raise argparse.ArgumentTypeError(f"empty range {part!r}")
            out.extend(range(lo, hi + 1))
        else:
            out.append(int(part))
    if not out:
        raise argparse.ArgumentTypeError("empty list")
    return out


def _int_list_arg(text: str) -> list[int]:
    try:
        return int_list(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


@dataclass
class RunConfig:
    command: str
    d: list[int] = field(default_factory=lambda: [3])
    n: list[int] = field(default_factory=lambda: [1])
    p: int | None = None
    q: list[int] = field(default_factory=lambda: [0])
    g: list[int] = field(default_factory=lambda: list(range(6)))
    divisor: str | None = None
    index_set: list[int] | None = None
    abc: list[int] | None = None
    out: str | None = None
    cache_dir: str | None = None
    max_enum: int = DEFAULT_MAX_ENUM
    jobs: int = 1
    verbosity: int = 0

    def check_enumeration(self, pairs):
        for d, n in pairs:
            if d >= 1 and d ** (n + 1) > self.max_enum:
                raise CapacityError(f"d={d}, n={n}: d^(n+1) = {d ** (n + 1)} exceeds --max-enum {self.max_enum}")


def _map(fn: Callable, items: Sequence, jobs: int) -> list:
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


# Grid-point workers.  Module level so a process pool can pickle them.

def decompose_point(args) -> dict:
    d, n, max_enum = args
    params = FermatParams(d, n)
    A = set_A(params, max_enum)
    B_sizes = [len(set_B(params, {i}, max_enum)) for i in range(n + 2)]
    hist = hodge_histogram(params, max_enum)
    oracle = {q: griffiths_hodge_number(params, q) for q in range(n + 1)}
    disjoint = all(A.isdisjoint(set_B(params, {i}, max_enum)) for i in range(n + 2))
    checks = {
        "closed_form_size_A": len(A) == expected_size_A(params),
        "hodge_oracle": hist == oracle,
        "A_disjoint_from_B": disjoint,
        "hodge_symmetry": all(hist[k] == hist[n - k] for k in range(n + 1)),
    }
    return {
        "label": f"d={d},n={n}",
        "ok": all(checks.values()),
        "d": d,
        "n": n,
        "group_order": params.group_order,
        "size_A": len(A),
        "B_sizes": B_sizes,
        "hodge_histogram": hist,
        "griffiths_counts": oracle,
        "checks": checks,
    }


def split_point(args) -> dict:
    d, n, p, q, max_enum = args
    model = build_model(FermatParams(d, n), p, q, max_enum)
    report = verify_split(model, max_enum)
    return {
        "label": f"d={d},n={n},p={p},q={q}",
        "ok": report.verdict,
        "d": d,
        "n": n,
        "p": p,
        "q": q,
        "middle_dim": model.middle.dim,
        "support_dim": model.support.dim,
        "kernel_dim": model.kernel_dim,
        **report.to_dict(),
    }


def cusp_point(d: int) -> dict:
    group = cuspdiv.class_group(d)
    return {"label": f"d={d}", "ok": group.rank == 3 * d - 1, **group.to_dict()}


def triangle_point(args) -> dict:
    d, n = args
    params = FermatParams(d, n)
    count = admissible = decomposable = 0
    for I, a, b, c in chow.valid_triangles(n):
        t = chow.triangle_cycle(params, I, a, b, c)
        count += 1
        admissible += chow.is_admissible(t)
        decomposable += chow.is_decomposable(t)
    return {
        "label": f"d={d},n={n}",
        "ok": admissible == count and decomposable == 0,
        "d": d,
        "n": n,
        "triangles": count,
        "admissible": admissible,
        "decomposable": decomposable,
    }


def triangle_detail(d: int, n: int, I, abc) -> dict:
    params = FermatParams(d, n)
    a, b, c = abc
    t = chow.triangle_cycle(params, I, a, b, c)
    pieces = []
    for term in t.terms:
        (f,) = term.functions
        pieces.append({
            "subvariety": list(term.Z.key),
            "plus": f.plus_idx,
            "minus": f.minus_idx,
            "divisor": [[list(k), v] for k, v in f.divisor().items()],
        })
    total = chow.divisor_sum(t)
    return {
        "label": f"d={d},n={n},I={sorted(I)},abc={list(abc)}",
        "ok": total.is_zero() and not chow.is_decomposable(t),
        "sub_identities": pieces,
        "divisor_sum": [[list(k), v] for k, v in total.items()],
        "admissible": chow.is_admissible(t),
        "decomposable": chow.is_decomposable(t),
    }


def diagonal_point(g: int) -> dict:
    small_nonzero = not kunneth.is_null_class(kunneth.partial_diagonal_class("D", g))
    modified_zero = kunneth.is_null_class(kunneth.modified_diagonal_class(g))
    return {
        "label": f"g={g}",
        "ok": small_nonzero and modified_zero,
        "g": g,
        "small_diagonal_nonzero": small_nonzero,
        "modified_diagonal_zero": modified_zero,
    }


def _split_grid(cfg: RunConfig) -> list[tuple]:
    points = []
    for n in cfg.n:
        p = cfg.p if cfg.p is not None else (n + 1) // 2
        for q in cfg.q:
            for d in cfg.d:
                points.append((d, n, p, q, cfg.max_enum))
    return points


def _check_split_inputs(points):
    # Build one small model per (n, p, q) so bad cases fail before any grid work.
    for n, p, q in sorted({(n, p, q) for _, n, p, q, _ in points}):
        build_model(FermatParams(1, n), p, q)


def cmd_decompose(cfg: RunConfig) -> tuple[dict, list[dict]]:
    cfg.check_enumeration((d, n) for d in cfg.d for n in cfg.n)
    inputs = {"d": cfg.d, "n": cfg.n}
    rows = _map(decompose_point, [(d, n, cfg.max_enum) for n in cfg.n for d in cfg.d], cfg.jobs)
    return inputs, rows


def cmd_split_check(cfg: RunConfig) -> tuple[dict, list[dict]]:
    points = _split_grid(cfg)
    _check_split_inputs(points)
    cfg.check_enumeration((d, n) for d, n, *_ in points)
    inputs = {"d": cfg.d, "n": cfg.n, "p": cfg.p, "q": cfg.q}
    return inputs, _map(split_point, points, cfg.jobs)


def cmd_cusp_class_group(cfg: RunConfig) -> tuple[dict, list[dict]]:
    return {"d": cfg.d}, _map(cusp_point, list(cfg.d), cfg.jobs)


def cmd_torsion_order(cfg: RunConfig) -> tuple[dict, list[dict]]:
    if cfg.divisor is None:
        raise FermatError("torsion-order needs --divisor axis:idx=coeff,...")
    rows = []
    for d in cfg.d:
        D = cuspdiv.parse_divisor(d, cfg.divisor)
        order = cuspdiv.torsion_order(D)
        exponent = cuspdiv.class_group(d).exponent
        rows.append({
            "label": f"d={d}",
            "ok": exponent % order == 0,
            "d": d,
            "divisor": list(D.coeffs),
            "torsion_order": order,
            "class_group_exponent": exponent,
        })
    return {"d": cfg.d, "divisor": cfg.divisor}, rows


def cmd_verify_triangle(cfg: RunConfig) -> tuple[dict, list[dict]]:
    if cfg.abc is not None:
        if len(cfg.abc) != 3:
            raise FermatError("--abc needs exactly three indices")
        I = cfg.index_set or []
        inputs = {"d": cfg.d, "n": cfg.n, "I": I, "abc": cfg.abc}
        return inputs, [triangle_detail(d, n, I, cfg.abc) for n in cfg.n for d in cfg.d]
    for n in cfg.n:
        FermatParams(1, n)
    inputs = {"d": cfg.d, "n": cfg.n}
    return inputs, _map(triangle_point, [(d, n) for n in cfg.n for d in cfg.d], cfg.jobs)


def cmd_modified_diagonal(cfg: RunConfig) -> tuple[dict, list[dict]]:
    if any(g < 0 for g in cfg.g):
        raise FermatError("genus must be >= 0")
    return {"g": cfg.g}, _map(diagonal_point, list(cfg.g), cfg.jobs)


def all_checks_configs(base: RunConfig) -> list[RunConfig]:
    """The fixed grid behind ``all-checks``."""
    common = dict(max_enum=base.max_enum, jobs=base.jobs)
    return [
        RunConfig("decompose", d=list(range(1, 9)), n=[1, 2, 3], **common),
        RunConfig("split-check", d=list(range(3, 9)), n=[1, 3, 5], q=[0], **common),
        RunConfig("split-check", d=list(range(3, 9)), n=[3, 5], q=[1], **common),
        RunConfig("cusp-class-group", d=list(range(1, 21)), **common),
        RunConfig("torsion-order", d=[3], divisor="0:0=1,0:1=-1", **common),
        RunConfig("verify-triangle", d=list(range(2, 7)), n=[2, 3, 4, 5], **common),
        RunConfig("modified-diagonal", g=list(range(6)), **common),
    ]


def cmd_all_checks(cfg: RunConfig) -> tuple[dict, list[dict]]:
    rows, inputs = [], []
    for sub in all_checks_configs(cfg):
        sub_inputs, sub_rows = HANDLERS[sub.command](sub)
        inputs.append({"command": sub.command, **sub_inputs})
        rows.extend({**row, "label": f"{sub.command}:{row['label']}"} for row in sub_rows)
    return {"suite": inputs}, rows


HANDLERS: dict[str, Callable[[RunConfig], tuple[dict, list[dict]]]] = {
    "decompose": cmd_decompose,
    "split-check": cmd_split_check,
    "cusp-class-group": cmd_cusp_class_group,
    "torsion-order": cmd_torsion_order,
    "verify-triangle": cmd_verify_triangle,
    "modified-diagonal": cmd_modified_diagonal,
    "all-checks": cmd_all_checks,
}


def run(cfg: RunConfig) -> dict:
    """Execute one command, consulting the cache when configured."""
    start = time.perf_counter()
    cache = ResultCache(cfg.cache_dir) if cfg.cache_dir else None
    key_inputs = _key_inputs(cfg)
    report = cache.get(cfg.command, key_inputs) if cache else None
    cached = report is not None
    if report is None:
        inputs, rows = HANDLERS[cfg.command](cfg)
        extras = {}
        if cfg.command == "split-check":
            extras["scalars"] = {row["label"]: row["scalar"] for row in rows}
        report = build_report(cfg.command, inputs, rows, extras)
        if cache:
            cache.put(cfg.command, key_inputs, report)
    log.info("%s: %s in %.3fs (cached=%s)", cfg.command,
             "pass" if report["verdicts"]["all_passed"] else "FAIL",
             time.perf_counter() - start, cached)
    report = dict(report)
    report["timing"] = {
        "elapsed_seconds": format(time.perf_counter() - start, ".6f"),
        "cached": cached,
    }
    return report


def _key_inputs(cfg: RunConfig) -> dict:
    # jobs, out, cache_dir and verbosity cannot change results
    return {
        "d": cfg.d, "n": cfg.n, "p": cfg.p, "q": cfg.q, "g": cfg.g,
        "divisor": cfg.divisor, "I": cfg.index_set, "abc": cfg.abc,
        "max_enum": cfg.max_enum,
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fermatcycles", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--d", type=_int_list_arg, help="degree(s): 3, 3,5 or 3:8")
        sp.add_argument("--d-range", type=_int_list_arg, help="inclusive degree range lo:hi")
        sp.add_argument("--n", type=_int_list_arg, help="dimension(s)")
        sp.add_argument("--p", type=int, help="codimension (default (n+1)/2)")
        sp.add_argument("--q", type=_int_list_arg, help="Chow level(s)")
        sp.add_argument("--g", type=_int_list_arg, help="genus or genera")
        sp.add_argument("--divisor", help="cuspidal divisor, e.g. 0:0=1,0:1=-1")
        sp.add_argument("--I", dest="index_set", type=_int_list_arg, help="index set for verify-triangle")
        sp.add_argument("--abc", type=_int_list_arg, help="a,b,c for verify-triangle")
        sp.add_argument("--out", help="write the report here instead of stdout")
        sp.add_argument("--cache-dir", help="directory for cached reports")
        sp.add_argument("--max-enum", type=int, default=DEFAULT_MAX_ENUM, help="limit on d^(n+1)")
        sp.add_argument("--jobs", type=int, default=1, help="worker processes for grid points")
        sp.add_argument("-v", "--verbose", action="count", default=0)
    return parser


_DEFAULTS = {
    "decompose": {"d": [3], "n": [1]},
    "split-check": {"d": list(range(3, 9)), "n": [1, 3]},
    "cusp-class-group": {"d": [3]},
    "torsion-order": {"d": [3]},
    "verify-triangle": {"d": [3], "n": [3]},
    "modified-diagonal": {},
    "all-checks": {},
}


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    defaults = _DEFAULTS[ns.command]
    cfg = RunConfig(ns.command, max_enum=ns.max_enum, jobs=max(1, ns.jobs), verbosity=ns.verbose)
    d = ns.d_range or ns.d or defaults.get("d")
    if d is not None:
        cfg.d = d
    if ns.n is not None or "n" in defaults:
        cfg.n = ns.n or defaults["n"]
    if ns.q is not None:
        cfg.q = ns.q
    if ns.g is not None:
        cfg.g = ns.g
    cfg.p = ns.p
    cfg.divisor = ns.divisor
    cfg.index_set = ns.index_set
    cfg.abc = ns.abc
    cfg.out = ns.out
    cfg.cache_dir = ns.cache_dir
    return cfg


def main(argv: Sequence[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if ns.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        cfg = config_from_args(ns)
        report = run(cfg)
    except FermatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = dumps(report)
    if cfg.out:
        atomic_write(cfg.out, text)
    else:
        sys.stdout.write(text)
    return 0 if report["verdicts"]["all_passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
