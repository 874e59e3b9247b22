"""Command-line interface: ``compute``, ``sweep``, ``gen`` and ``verify``.

Exit codes: 0 on success, 1 for parse or validation errors, 2 when a
verification suite fails.
"""

from __future__ import annotations

import argparse
import csv
import functools
import json
import logging
import sys
from contextlib import contextmanager

import numpy as np

from .channels import channel_family, sweep, uniform_grid
from .errors import ValidationError
from .linalg import hermitian_eig
from .measures import MEASURES, uin, w_matrix
from .states import (
    BUILTINS,
    BipartiteState,
    bipartite,
    bloch_vector_a,
    builtin,
    random_product,
    random_pure,
    random_state,
)
from .verify import run_suites, trial_seed

log = logging.getLogger("skewcorr")

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VERIFY_FAILED = 2
SWEEP_COLUMNS = ("uin", "muin", "lqu", "min_hs")


def fmt(x: float) -> str:
    return f"{x:.12g}"


def read_state_file(path: str) -> BipartiteState:
    try:
        with open(path) as fh:
            doc = json.load(fh)
        d_a, d_b = (int(v) for v in doc["dims"])
        m = np.array([[complex(re, im) for re, im in row] for row in doc["matrix"]])
    except OSError as exc:
        raise ValidationError("read", str(exc)) from None
    except (ValueError, KeyError, TypeError) as exc:
        raise ValidationError("parse", f"{path}: malformed state file ({exc})") from None
    return bipartite(m, d_a, d_b)


def state_to_dict(rho: BipartiteState) -> dict:
    return {
        "dims": [rho.d_a, rho.d_b],
        "matrix": [[[float(z.real), float(z.imag)] for z in row] for row in rho.matrix],
    }


@contextmanager
def _output(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
        return
    try:
        fh = open(path, "w", newline="")
    except OSError as exc:
        raise ValidationError("write", str(exc)) from None
    with fh:
        yield fh


def _load(args) -> BipartiteState:
    if args.builtin is not None:
        return builtin(args.builtin)
    return read_state_file(args.state)


def report(rho: BipartiteState) -> dict:
    u = uin(rho)
    out = {"uin": u.value}
    for name in SWEEP_COLUMNS[1:]:
        out[name] = MEASURES[name](rho).value
    out["bloch_norm"] = float(np.linalg.norm(bloch_vector_a(rho)))
    out["branch"] = u.branch
    out["w_eigenvalues"] = [float(x) for x in hermitian_eig(w_matrix(rho)).eigenvalues]
    return out


def cmd_compute(args) -> int:
    rep = report(_load(args))
    if args.json:
        print(json.dumps(rep, indent=2))
        return EXIT_OK
    for key, val in rep.items():
        if isinstance(val, list):
            val = ",".join(fmt(v) for v in val)
        elif isinstance(val, float):
            val = fmt(val)
        print(f"{key}={val}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    rho = _load(args)
    family = channel_family(args.channel)
    if args.channel == "depolarizing":
        family = functools.partial(family, d=rho.d_b)
    elif rho.d_b != 2:
        raise ValidationError("channel", f"{args.channel} acts on a qubit, subsystem B has d_B={rho.d_b}")
    series = sweep(rho, family, uniform_grid(args.points), SWEEP_COLUMNS, workers=args.workers)
    with _output(args.out) as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(("gamma",) + SWEEP_COLUMNS)
        for g, vals in series.rows():
            writer.writerow([fmt(g)] + [fmt(vals[c]) for c in SWEEP_COLUMNS])
    return EXIT_OK


def cmd_gen(args) -> int:
    d_a, d_b = args.dims
    if d_a != 2:
        log.warning("d_A = %d: closed-form measures only support d_A = 2", d_a)
    if args.kind == "random-mixed":
        rho = random_state(d_a, d_b, args.seed)
    elif args.kind == "random-pure":
        rho = random_pure(d_a, d_b, args.seed)
    else:
        rho = random_product(d_a, d_b, args.seed)
    with _output(args.out) as fh:
        json.dump(state_to_dict(rho), fh)
        fh.write("\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.trials < 1:
        raise ValidationError("trials", f"trials must be at least 1, got {args.trials}")
    failed = []
    for res in run_suites(args.seed, args.trials):
        status = "pass" if res.passed else "fail"
        print(
            f"suite={res.name} trials={res.trials} max_deviation={res.max_deviation:.3e} "
            f"tolerance={res.tolerance:g} status={status}"
        )
        if not res.passed:
            failed.append(res)
    for res in failed:
        for t in res.failures:
            print(
                f"failure suite={res.name} seed={args.seed} trial={t} "
                f"trial_seed={trial_seed(args.seed, res.index, t)}",
                file=sys.stderr,
            )
    print(f"overall={'fail' if failed else 'pass'}")
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def _add_source(p: argparse.ArgumentParser):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", choices=sorted(BUILTINS), help="builtin reference state")
    src.add_argument("--state", metavar="PATH", help="JSON state file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skewcorr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="evaluate every measure on one state")
    _add_source(p)
    p.add_argument("--json", action="store_true", help="emit a JSON object instead of key=value lines")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("sweep", help="tabulate measures along a channel family on B")
    _add_source(p)
    p.add_argument("--channel", default="amplitude-damping",
                   choices=["amplitude-damping", "phase-damping", "depolarizing"])
    p.add_argument("--points", type=int, default=101)
    p.add_argument("--out", default="-", help="CSV path, '-' for stdout")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("gen", help="write a seeded random state file")
    p.add_argument("kind", choices=["random-mixed", "random-pure", "product"])
    p.add_argument("dims", type=int, nargs=2, metavar=("DA", "DB"))
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="run the seeded invariant suites")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=50)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
