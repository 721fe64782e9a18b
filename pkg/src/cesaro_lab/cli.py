"""Command-line interface.

Subcommands: ``apply`` (operator on a sequence), ``norm`` (space norm),
``eigen`` (eigen certificate), ``bound`` (one norm sandwich), ``spectrum``
(finite-section eigenvalues), ``verify`` (full suite). Configuration comes
from an optional JSON file with flag overrides; flags win. Exit codes:
0 pass, 1 check failure, 2 configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

import numpy as np

from .config import ConfigError, load_config
from .operators import OperatorSpec, apply_operator
from .report import emit, render
from .seqs import make_sequence, seq_from_json, seq_to_json
from .spaces import SpaceSpec, space_norm
from .spectral import (
    eigen_certificate,
    finite_section_eigenvalues,
    hausdorff_to_eigenvalue_set,
    norm_lower_bound,
)
from .suite import run_suite

EXIT_PASS = 0
EXIT_CHECK_FAILURE = 1
EXIT_CONFIG_ERROR = 2


def _parse_sequence(text: str, n: int) -> np.ndarray:
    """A sequence argument is either inline JSON (``[1, 0.5, ...]``), the
    path of a JSON file, or a generator name like ``geometric:t=0.5``."""
    text = text.strip()
    if text.startswith("["):
        return seq_from_json(json.loads(text))
    if text.endswith(".json"):
        with open(text, "r", encoding="utf-8") as fh:
            return seq_from_json(json.load(fh))
    return make_sequence(text, n)


def _parse_space(text: str) -> SpaceSpec:
    return SpaceSpec.from_json(json.loads(text))


def _parse_operator(text: str, t: float | None) -> OperatorSpec:
    if text.strip().startswith("{"):
        return OperatorSpec.from_json(json.loads(text))
    if text == "CesaroT":
        return OperatorSpec("CesaroT", t=0.5 if t is None else t)
    if text == "Diagonal":
        return OperatorSpec("Diagonal")
    raise ValueError("operator must be JSON or one of: CesaroT, Diagonal")


def _print(payload: dict, out: str | None) -> None:
    text = render(payload) + "\n"
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cesaro-lab",
        description="Weighted averaging operators on sequence spaces: "
        "evaluate, certify, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=None, help="prefix length")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--out", default=None, help="write output to this path")

    p_apply = sub.add_parser("apply", parents=[common], help="apply an operator to a sequence")
    p_apply.add_argument("--op", required=True, help="operator JSON or kind name")
    p_apply.add_argument("--t", type=float, default=None)
    p_apply.add_argument("--seq", required=True, help="JSON array, .json path, or generator")

    p_norm = sub.add_parser("norm", parents=[common], help="evaluate a space norm")
    p_norm.add_argument("--space", required=True, help='space JSON, e.g. {"kind":"CesP","p":2}')
    p_norm.add_argument("--seq", required=True)

    p_eigen = sub.add_parser("eigen", parents=[common], help="emit an eigen certificate")
    p_eigen.add_argument("--t", type=float, required=True)
    p_eigen.add_argument("--m", type=int, required=True)
    p_eigen.add_argument("--space", default='{"kind":"Lp","p":2}')

    p_bound = sub.add_parser("bound", parents=[common], help="one norm sandwich")
    p_bound.add_argument("--space", required=True)
    p_bound.add_argument("--op", default="CesaroT")
    p_bound.add_argument("--t", type=float, default=None)
    p_bound.add_argument("--budget", type=int, default=4000)

    p_spec = sub.add_parser("spectrum", parents=[common], help="finite-section eigenvalues")
    p_spec.add_argument("--t", type=float, required=True)

    p_verify = sub.add_parser("verify", parents=[common], help="run the full suite")
    p_verify.add_argument("--config", default=None, help="JSON configuration file")
    p_verify.add_argument("--t", default=None, help="comma-separated t grid override")
    p_verify.add_argument("--p", default=None, help="comma-separated p grid override")
    p_verify.add_argument("--q", default=None, help="comma-separated q grid override")
    p_verify.add_argument("--budget", type=int, default=None)
    p_verify.add_argument(
        "--format", default="json", choices=("json", "csv", "markdown"), dest="fmt"
    )
    return parser


def _cmd_apply(args: argparse.Namespace) -> int:
    n = args.n or 32
    op = _parse_operator(args.op, args.t)
    x = _parse_sequence(args.seq, n)
    y = apply_operator(op, x)
    _print({"operator": op.to_json(), "input": seq_to_json(x), "output": seq_to_json(y)}, args.out)
    return EXIT_PASS


def _cmd_norm(args: argparse.Namespace) -> int:
    n = args.n or 32
    space = _parse_space(args.space)
    x = _parse_sequence(args.seq, n)
    value = space_norm(space, x)
    _print(
        {
            "space": space.to_json(),
            "value": value.value,
            "exactness": value.exactness,
            "tail_bound": value.tail_bound,
        },
        args.out,
    )
    return EXIT_PASS


def _cmd_eigen(args: argparse.Namespace) -> int:
    n = args.n or 512
    cert = eigen_certificate(args.t, args.m, n, _parse_space(args.space))
    _print(cert.to_json(), args.out)
    return EXIT_PASS


def _cmd_bound(args: argparse.Namespace) -> int:
    n = args.n or 512
    op = _parse_operator(args.op, args.t)
    cert = norm_lower_bound(
        _parse_space(args.space), op, budget=args.budget, seed=args.seed or 42, n=n
    )
    _print(cert.to_json(), args.out)
    return EXIT_PASS


def _cmd_spectrum(args: argparse.Namespace) -> int:
    n = args.n or 512
    eigs, max_dev = finite_section_eigenvalues(args.t, n)
    _print(
        {
            "t": args.t,
            "n": n,
            "eigenvalues": [float(v) for v in eigs],
            "max_deviation": max_dev,
            "hausdorff_to_limit_set": hausdorff_to_eigenvalue_set(eigs, n),
        },
        args.out,
    )
    return EXIT_PASS


def _grid(text: str | None) -> tuple[float, ...] | None:
    if text is None:
        return None
    return tuple(float(v) for v in str(text).split(","))


def _cmd_verify(args: argparse.Namespace) -> int:
    cfg = load_config(
        args.config,
        t_grid=_grid(args.t),
        p_grid=_grid(args.p),
        q_grid=_grid(args.q),
        n=args.n,
        seed=args.seed,
        budget=args.budget,
    )
    reports = run_suite(cfg)
    failed = [r for r in reports if not r.passed]
    if args.out:
        emit(reports, args.fmt, args.out)
    else:
        for r in reports:
            sys.stdout.write("%s %s\n" % (r.status.upper().ljust(5), r.claim_id))
    sys.stderr.write(
        "cesaro-lab verify: %d checks, %d failed\n" % (len(reports), len(failed))
    )
    return EXIT_CHECK_FAILURE if failed else EXIT_PASS


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "apply": _cmd_apply,
        "norm": _cmd_norm,
        "eigen": _cmd_eigen,
        "bound": _cmd_bound,
        "spectrum": _cmd_spectrum,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except ConfigError as exc:
        sys.stderr.write("configuration error: %s\n" % exc)
        return EXIT_CONFIG_ERROR
    except (ValueError, IndexError, OverflowError, json.JSONDecodeError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_CONFIG_ERROR


if __name__ == "__main__":
    sys.exit(main())
