"""Command line: enumerate, lvalues, experiment, constants.

Exit codes: 0 success, 1 computational failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from . import lab
from .cache import LValueCache
from .characters import family_slice, write_family_csv
from .constants import euler_constants
from .errors import ArtifactError, ConductorTooLargeForOracle
from .lvalues import AFE_TOLERANCE, DIRECT_CAP, central_values

EXPERIMENTS = ("first-moment", "moments", "polya", "holder", "logbound", "nonvanishing", "primesum", "constants")
DESK_LADDER = (2, 1)
CHUNK = 2000


@dataclass
class RunConfig:
    family: str = "cubic"
    xmax: int = 10**4
    xsweep: list = field(default_factory=list)
    k: list = field(default_factory=lambda: [1.0])
    twist: list = field(default_factory=lambda: [1])
    c: list = field(default_factory=lambda: [1, 8, 2, 3, 5])
    cache: Optional[str] = None
    threads: int = 1
    out: str = "reports"
    method: str = "afe"
    slack: float = 2.0
    eps: float = AFE_TOLERANCE
    threshold: float = 1e-4
    ladder: list = field(default_factory=lambda: list(DESK_LADDER))
    y: float = 100.0
    m: list = field(default_factory=lambda: [1, 2, 3])

    def validate(self) -> None:
        if self.family not in ("cubic", "quartic"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.xmax < 1 or any(x < 1 for x in self.xsweep):
            raise ValueError("X values must be positive")
        if not self.k or not self.twist or not self.c or not self.m:
            raise ValueError("sweep lists must be nonempty")
        if not (self.eps > 0 and self.slack >= 0 and self.threshold >= 0):
            raise ValueError("precisions must be positive")
        if self.threads < 1:
            raise ValueError("--threads must be >= 1")

    def sweep(self) -> list:
        return list(self.xsweep) if self.xsweep else [self.xmax]

    def embedded(self) -> dict:
        """The config as stored in reports; run-mechanics fields are left out so
        outputs do not depend on thread count or paths."""
        d = asdict(self)
        for key in ("threads", "cache", "out"):
            d.pop(key)
        return d


def _ints(text: str) -> list:
    return [int(float(x)) for x in text.split(",") if x.strip()]


def _floats(text: str) -> list:
    return [float(x) for x in text.split(",") if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=("cubic", "quartic"), default="cubic")
    common.add_argument("--xmax", type=lambda s: int(float(s)), default=10**4)
    common.add_argument("--xsweep", type=_ints, default=[])
    common.add_argument("--k", type=_floats, default=[1.0])
    common.add_argument("--twist", type=_ints, default=[1])
    common.add_argument("--c", type=_ints, default=[1, 8, 2, 3, 5])
    common.add_argument("--cache", default=None, help="L-value cache CSV")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    common.add_argument("--out", default="reports")
    common.add_argument("--method", choices=("afe", "direct", "both"), default="afe")
    common.add_argument("--slack", type=float, default=2.0)
    common.add_argument("--threshold", type=float, default=1e-4)
    common.add_argument("--ladder", type=_ints, default=list(DESK_LADDER))
    common.add_argument("--y", type=float, default=100.0, help="prime-sum length")
    common.add_argument("--m", type=_ints, default=[1, 2, 3], help="prime-sum moments")

    p = argparse.ArgumentParser(prog="artifact", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("enumerate", parents=[common], help="write the family CSV")
    sub.add_parser("lvalues", parents=[common], help="populate the L-value cache")
    ex = sub.add_parser("experiment", parents=[common], help="run an experiment and write reports")
    ex.add_argument("which", choices=EXPERIMENTS)
    sub.add_parser("constants", parents=[common], help="print the Euler constants as JSON")
    return p


def config_from_args(args) -> RunConfig:
    cfg = RunConfig(
        family=args.family, xmax=args.xmax, xsweep=args.xsweep, k=args.k, twist=args.twist, c=args.c,
        cache=args.cache, threads=args.threads, out=args.out, method=args.method, slack=args.slack,
        threshold=args.threshold, ladder=args.ladder, y=args.y, m=args.m,
    )
    cfg.validate()
    return cfg


# ------------------------------------------------------------------ commands


def cmd_enumerate(cfg: RunConfig) -> Path:
    fs = family_slice(cfg.family, cfg.xmax)
    path = Path(cfg.out) / f"family_{cfg.family}_{cfg.xmax}.csv"
    write_family_csv(fs, path)
    print(f"{len(fs)} members -> {path}")
    return path


def cmd_lvalues(cfg: RunConfig, qmin: int = 1) -> LValueCache:
    """Fill the cache for conductors qmin..xmax; rows already present are skipped."""
    if cfg.cache is None:
        raise ValueError("lvalues needs --cache")
    cache = LValueCache(cfg.cache)
    members = family_slice(cfg.family, cfg.xmax).restrict(qmin, cfg.xmax).members
    methods = ["afe", "direct"] if cfg.method == "both" else [cfg.method]
    for method in methods:
        todo = [chi for chi in members if not cache.has(chi.key, method)]
        if method == "direct":
            too_big = [chi.q for chi in todo if chi.q > DIRECT_CAP]
            if too_big and cfg.method == "direct":
                raise ConductorTooLargeForOracle(f"q = {max(too_big)} exceeds the direct-oracle cap {DIRECT_CAP}")
            todo = [chi for chi in todo if chi.q <= DIRECT_CAP]
        for i in range(0, len(todo), CHUNK):
            cache.append(central_values(todo[i : i + CHUNK], method, cfg.threads))
    cache.finalize()
    if cfg.method == "both":
        cpath = Path(cfg.cache).with_suffix(".compare.csv")
        n = cache.write_comparison(cpath)
        print(f"{n} afe/direct comparisons -> {cpath}")
    print(f"{len(cache)} rows in {cfg.cache}")
    return cache


def _values(cfg: RunConfig, need: int) -> dict:
    """Central values up to conductor ``need``: from the cache when given, else computed."""
    if cfg.cache is not None:
        return LValueCache(cfg.cache).values(cfg.family)
    members = family_slice(cfg.family, int(need)).members
    return {r.key: r.value for r in central_values(members, "afe", cfg.threads)}


def run_experiment(cfg: RunConfig, which: str) -> list:
    fam, xs = cfg.family, cfg.sweep()
    if which == "first-moment":
        vals = _values(cfg, 2 * max(xs))
        reports = [lab.run_first_moment(fam, xs, ell, vals) for ell in cfg.twist]
    elif which == "moments":
        vals = _values(cfg, max(xs))
        reports = [lab.run_moments(fam, xs, k, vals) for k in cfg.k]
    elif which == "polya":
        reports = [lab.run_polya(fam, X, cfg.c) for X in xs]
    elif which == "holder":
        vals = _values(cfg, 2 * max(xs))
        reports = [lab.run_holder(fam, xs, cfg.k, vals, cfg.ladder)]
    elif which == "logbound":
        vals = _values(cfg, max(xs))
        reports = [lab.run_logbound(fam, X, vals, cfg.slack) for X in xs]
    elif which == "nonvanishing":
        vals = _values(cfg, max(xs))
        reports = [lab.run_nonvanishing(fam, X, cfg.threshold, vals) for X in xs]
    elif which == "primesum":
        reports = [lab.run_primesum(fam, X, cfg.y, cfg.m) for X in xs]
    elif which == "constants":
        reports = [lab.run_constants(fam)]
    else:  # pragma: no cover - argparse restricts the choices
        raise ValueError(which)
    for rep in reports:
        rep.config = {**cfg.embedded(), "experiment": which, **rep.config}
    return reports


def cmd_experiment(cfg: RunConfig, which: str) -> list:
    reports = run_experiment(cfg, which)
    paths = []
    for rep in reports:
        j, c = rep.write(cfg.out)
        paths += [j, c]
        print(f"{rep.experiment}: {j}")
    return paths


def constants_json(family: str) -> str:
    ec = euler_constants(family)
    keys = ("family", "r_K", "zeta_K2", "c_K", "phi_hat_1", "precision")
    return json.dumps({k: getattr(ec, k) for k in keys}, indent=2) + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on usage errors
    try:
        cfg = config_from_args(args)
    except ValueError as exc:
        parser.print_usage(sys.stderr)
        print(f"artifact: error: {exc}", file=sys.stderr)
        return 2
    try:
        if args.command == "enumerate":
            cmd_enumerate(cfg)
        elif args.command == "lvalues":
            cmd_lvalues(cfg)
        elif args.command == "experiment":
            cmd_experiment(cfg, args.which)
        elif args.command == "constants":
            sys.stdout.write(constants_json(cfg.family))
    except ValueError as exc:
        if isinstance(exc, ArtifactError):
            print(f"artifact: {exc}", file=sys.stderr)
            return 1
        print(f"artifact: error: {exc}", file=sys.stderr)
        return 2
    except (ArtifactError, OSError, ArithmeticError) as exc:
        print(f"artifact: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
