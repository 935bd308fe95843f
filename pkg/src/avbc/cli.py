"""Command-line entry point.

Exit status: 0 success, 1 validation error (bad arguments or config),
2 runtime failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import bsbc
from .channel import (
    BroadcastChannel,
    DmcWithState,
    StrategyMap,
    bsbc_example1,
    bsbc_example2,
    degraded_check,
    strategy_channels,
)
from .regions import (
    DEFAULT_POINTS,
    SearchSpace,
    avbc_bounds,
    check_condition_T,
    compound_bounds,
    degraded_bounds,
    jahn_space,
    region_jahn_no_si,
    region_random_parameter,
    state_grid,
)
from .sim import (
    JammerSpec,
    RandomPermutationCode,
    adversarial_family,
    SuperpositionCode,
    eliminate,
    generate_codebook_counts,
    run_ensemble_trials,
    run_trials,
)
from .symmetrize import is_symmetrizable, nonempty_interior_check

EXPLICIT_LIMIT = 1 << 16  # largest M0*M1 decoded exhaustively


class ValidationError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(message)


# config helpers --------------------------------------------------------------

def load_config(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ValidationError(f"cannot read config {path}: {exc}") from exc


def channel_from(cfg: dict) -> BroadcastChannel:
    ch = cfg.get("channel")
    if ch is None:
        raise ValidationError("config needs a 'channel' entry")
    preset = ch.get("preset")
    if preset == "example1":
        return bsbc_example1(ch["theta0"], ch["theta1"], ch["alpha"])
    if preset == "example2":
        return bsbc_example2(ch["theta0"], ch["theta1"], ch["eps0"], ch["eps1"])
    if preset is not None:
        raise ValidationError(f"unknown channel preset {preset!r}")
    return BroadcastChannel.from_json(ch)


def map_from(cfg: dict, W: BroadcastChannel, key: str = "xi") -> StrategyMap:
    m = cfg.get(key, "xor")
    if m == "xor":
        return StrategyMap.xor(ns=W.ns)
    return StrategyMap.from_json(m)


def pmf_table(cfg: dict, key: str = "p") -> np.ndarray:
    p = cfg.get(key)
    if p is None:
        raise ValidationError(f"config needs '{key}'")
    if isinstance(p, dict):
        g, b = float(p.get("gamma", 0.5)), float(p["beta"])
        return np.outer([1 - g, g], [1 - b, b])
    return np.asarray(p, dtype=float)


def space_from(cfg: dict, W: BroadcastChannel) -> SearchSpace:
    sp = cfg.get("space", {"preset": "binary-exhaustive"})
    return SearchSpace.from_json(sp, W)


def _write(out: str | None, name: str, text: str) -> Path | None:
    if out is None:
        return None
    d = Path(out)
    d.mkdir(parents=True, exist_ok=True)
    path = d / name
    path.write_text(text)
    return path


def _emit(args, name: str, payload: dict) -> None:
    text = json.dumps(payload, indent=2)
    if _write(args.out, name, text) is None:
        print(text)


# subcommands -------------------------------------------------------------------

def cmd_region(args, cfg) -> int:
    W = channel_from(cfg)
    space = space_from(cfg, W)
    pts = args.grid or DEFAULT_POINTS
    kind = cfg.get("bound", "avbc")
    if "q" in cfg:
        space = space.with_q(np.atleast_2d(np.asarray(cfg["q"], float)))
    if kind == "avbc":
        inner, outer = avbc_bounds(W, space, pts)
    elif kind == "compound":
        inner, outer = compound_bounds(W, space, pts)
    elif kind == "degraded":
        if not degraded_check(W).degraded:
            raise ValidationError("channel is not degraded")
        inner, outer = degraded_bounds(W, space, pts)
    else:
        raise ValidationError(f"unknown bound kind {kind!r}")
    _write(args.out, "inner.csv", inner.to_csv())
    _write(args.out, "outer.csv", outer.to_csv())
    _emit(args, "region.json", {"inner": inner.to_json(), "outer": outer.to_json()})
    return 0


def cmd_rp_capacity(args, cfg) -> int:
    W = channel_from(cfg)
    q = np.asarray(cfg.get("q", [0.5, 0.5]), dtype=float)
    if q.ndim == 0:
        q = np.array([1 - q, q])
    reg = region_random_parameter(W, q, space_from(cfg, W), args.grid or DEFAULT_POINTS)
    _write(args.out, "rp_capacity.csv", reg.to_csv())
    _emit(args, "rp_capacity.json", reg.to_json())
    return 0


def cmd_jahn(args, cfg) -> int:
    W = channel_from(cfg)
    space = jahn_space(W, cfg.get("u_size", 2), cfg.get("resolution", 20), cfg.get("q_points", 101))
    reg = region_jahn_no_si(W, space, args.grid or DEFAULT_POINTS)
    _write(args.out, "jahn.csv", reg.to_csv())
    _emit(args, "jahn.json", {"trivial": reg.is_trivial(), "region": reg.to_json()})
    return 0


def cmd_condition_t(args, cfg) -> int:
    W = channel_from(cfg)
    xi = map_from(cfg, W)
    if "D" in cfg:
        D = np.asarray(cfg["D"], dtype=float)
    else:
        g = cfg.get("gamma", 0.5)
        D = np.array([np.outer([1 - g, g], [1 - b, b]) for b in np.linspace(0, 1, args.grid or 101)])
    qg = state_grid(W.ns, cfg.get("q_points", 101))
    rep = check_condition_T(W, xi, D, qg, cfg.get("tol", 1e-6))
    out = rep.to_json()
    out.pop("per_p_argmin")
    _emit(args, "condition_t.json", out)
    return 0


def cmd_symmetrizable(args, cfg) -> int:
    tol = cfg.get("tol", 1e-9)
    if "dmc" in cfg:
        res = is_symmetrizable(DmcWithState.from_json(cfg["dmc"]), tol)
        _emit(args, "symmetrizable.json", res.to_json())
        return 0
    W = channel_from(cfg)
    xi = map_from(cfg, W)
    pub = np.asarray(cfg.get("xi_pub", xi.table[:, 0, :].tolist()), dtype=int)
    v1, v2 = strategy_channels(xi, pub, W)
    r1, r2 = is_symmetrizable(v1, tol), is_symmetrizable(v2, tol)
    _emit(args, "symmetrizable.json", {
        "V1": r1.to_json(), "V2": r2.to_json(),
        "nonempty_interior": nonempty_interior_check(W, xi, pub, tol),
    })
    return 0


def cmd_degraded(args, cfg) -> int:
    res = degraded_check(channel_from(cfg))
    _emit(args, "degraded.json", {
        "degraded": res.degraded,
        "witness": None if res.witness is None else res.witness.tolist(),
    })
    return 0


def _counts(cfg: dict, n: int) -> tuple[int, int]:
    if "M0" in cfg or "M1" in cfg:
        return int(cfg.get("M0", 1)), int(cfg.get("M1", 1))
    return (max(1, math.floor(2 ** (n * float(cfg.get("R0", 0.0))))),
            max(1, math.floor(2 ** (n * float(cfg.get("R1", 0.0))))))


def cmd_simulate(args, cfg) -> int:
    W = channel_from(cfg)
    xi = map_from(cfg, W)
    p = pmf_table(cfg)
    n = int(cfg.get("n", 64))
    M0, M1 = _counts(cfg, n)
    delta = args.delta if args.delta is not None else cfg.get("delta", 0.05)
    trials = args.trials or cfg.get("trials", 1000)
    seed = args.seed if args.seed is not None else cfg.get("seed", 0)
    jam = JammerSpec.from_json(cfg.get("jammer", {"kind": "iid", "q": [0.5, 0.5]}))
    if M0 * M1 <= EXPLICIT_LIMIT:
        cb = generate_codebook_counts(p, xi, n, M0, M1, seed)
        res = run_trials(SuperpositionCode(cb, W, delta), W, jam, trials, seed + 1)
        route = "codebook"
    else:
        res = run_ensemble_trials(p, xi, W, n, M0, M1, jam, trials, seed, delta)
        route = "ensemble"
    rec = {"n": n, "M0": M0, "M1": M1, "R0": math.log2(M0) / n, "R1": math.log2(M1) / n,
           "delta": delta, "route": route, "jammer": jam.to_json(), "seed": seed}
    rec.update(res.to_json())
    _emit(args, "simulate.json", rec)
    return 0


def cmd_eliminate(args, cfg) -> int:
    W = channel_from(cfg)
    xi = map_from(cfg, W)
    p = pmf_table(cfg)
    n = int(cfg.get("n", 32))
    M0, M1 = _counts(cfg, n)
    delta = args.delta if args.delta is not None else cfg.get("delta", 0.1)
    trials = args.trials or cfg.get("trials", 500)
    seed = args.seed if args.seed is not None else cfg.get("seed", 0)
    cb = generate_codebook_counts(p, xi, n, M0, M1, seed)
    family = RandomPermutationCode(SuperpositionCode(cb, W, delta))
    red = eliminate(family, n, seed=seed + 1)
    seqs = adversarial_family(n, cfg.get("sequences", 50), seed + 2)
    fam_err, red_err = [], []
    for j, s in enumerate(seqs):
        jam = JammerSpec.fixed(s)
        fam_err.append(run_trials(family, W, jam, trials, seed + 100 + j).err_total)
        red_err.append(run_trials(red.code, W, jam, trials, seed + 100 + j).err_total)
    _emit(args, "eliminate.json", {
        "n": n, "k": red.k, "trials_per_sequence": trials,
        "family_max_error": max(fam_err), "reduced_max_error": max(red_err),
        "family_errors": fam_err, "reduced_errors": red_err,
    })
    return 0


def cmd_figure(args, cfg) -> int:
    if args.name not in bsbc.FIGURES:
        raise ValidationError(f"unknown figure {args.name!r}")
    out = args.dir or args.out
    if out is None:
        raise ValidationError("figure needs an output directory")
    paths = bsbc.write_figure(args.name, out, args.grid or DEFAULT_POINTS)
    for p in paths:
        print(p)
    return 0


COMMANDS = {
    "region": cmd_region,
    "rp-capacity": cmd_rp_capacity,
    "jahn": cmd_jahn,
    "condition-t": cmd_condition_t,
    "symmetrizable": cmd_symmetrizable,
    "degraded-check": cmd_degraded,
    "simulate": cmd_simulate,
    "eliminate": cmd_eliminate,
    "figure": cmd_figure,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--config", help="JSON config file")
    common.add_argument("--out", help="output directory (JSON to stdout when omitted)")
    common.add_argument("--seed", type=int)
    common.add_argument("--grid", type=int, help="number of grid points")
    common.add_argument("--trials", type=int)
    common.add_argument("--delta", type=float, help="typicality slack")
    parser = _Parser(prog="avbc", description="Capacity bounds and coding simulation for "
                     "arbitrarily varying broadcast channels with causal state information.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "figure":
            sp.add_argument("name", help="fig2, fig3 or fig4")
            sp.add_argument("dir", nargs="?", help="output directory")
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise ValidationError("missing subcommand")
        cfg = load_config(args.config)
        return COMMANDS[args.command](args, cfg)
    except (ValidationError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001
        print(f"runtime error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
