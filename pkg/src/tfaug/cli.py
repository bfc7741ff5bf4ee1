"""Command line front end.

Subcommands: gen, metrics, augment, bounds, experiment, convert.
Exit codes: 0 on success, 1 when a theorem check fails, 2 on usage or
I/O errors.
"""

import argparse
import json
import sys
from pathlib import Path

from .augmentation import augment_dataset, make_rect_domain, mixed_state_localization
from .datasets import (
    gen_chirps,
    gen_gaussian_combos,
    gen_local_components,
    gen_random_tf_weighted,
)
from .experiments import CATALOG, ExperimentConfig, run_experiment
from .io import domain_from_json, domain_to_json, read_signals, write_signals
from .metrics import (
    alc,
    berezin_lieb_check,
    effective_dimension,
    finite_rank_error_check,
    general_berezin_lieb_check,
    lemma_alc_lower_bound,
    perimeter_bound_check,
)
from .operators import HermitianOperator, data_operator, total_correlation

GENERATORS = {
    "chirps": gen_chirps,
    "gaussian_combos": gen_gaussian_combos,
    "tf_weighted": gen_random_tf_weighted,
    "local_components": gen_local_components,
}


def _load_domain(args):
    if args.domain:
        try:
            return domain_from_json(Path(args.domain).read_text())
        except (OSError, ValueError, KeyError) as e:
            raise SystemExit(f"error: cannot read domain {args.domain}: {e}")
    if args.rect:
        w, h = args.rect
        return make_rect_domain(args.d, w, h)
    raise SystemExit("error: provide --domain FILE or --rect W H")


def _load_signals(path):
    try:
        return read_signals(path)
    except (OSError, ValueError) as e:
        raise SystemExit(f"error: cannot read signals {path}: {e}")


def cmd_gen(args) -> int:
    gen = GENERATORS[args.family]
    ds = gen(args.n, d=args.d, seed=args.seed)
    write_signals(args.out, ds)
    print(f"wrote {len(ds)} signals (d={ds.d}) to {args.out}")
    return 0


def cmd_metrics(args) -> int:
    ds = _load_signals(args.input)
    S = data_operator(ds)
    H, ed = effective_dimension(S)
    out = {"n_signals": len(ds), "d": ds.d, "H": H, "effective_dimension": ed}
    if args.domain or args.rect:
        args.d = ds.d
        dom = _load_domain(args)
        St = total_correlation(S)
        out["domain_measure"] = dom.measure
        out["alc"] = alc(St, dom)
        loc = mixed_state_localization(dom, S)
        H_aug, ed_aug = effective_dimension(
            HermitianOperator(loc.matrix / dom.measure)
        )
        out["H_augmented"] = H_aug
        out["effective_dimension_augmented"] = ed_aug
    print(json.dumps(out, indent=2, sort_keys=True))
    return 0


def cmd_augment(args) -> int:
    ds = _load_signals(args.input)
    args.d = ds.d
    dom = _load_domain(args)
    aug = augment_dataset(dom, ds)
    write_signals(args.out, aug)
    print(f"wrote {len(aug)} augmented signals to {args.out}")
    return 0


def cmd_bounds(args) -> int:
    ds = _load_signals(args.input)
    args.d = ds.d
    dom = _load_domain(args)
    S = data_operator(ds)
    rep = berezin_lieb_check(S, dom)
    lem_lhs, lem_rhs, lem_ok = lemma_alc_lower_bound(S, dom)
    rk_lhs, rk_rhs, rk_ok = finite_rank_error_check(S, dom)
    pm_lhs, pm_rhs, pm_verdict = perimeter_bound_check(S, dom)
    gbl = general_berezin_lieb_check(S, dom)
    out = {
        "sandwich": rep.to_json_dict(),
        "alc_lower_bound": {"lhs": lem_lhs, "rhs": lem_rhs, "pass": lem_ok},
        "finite_rank": {"error": rk_lhs, "bound": rk_rhs, "pass": rk_ok},
        "general_berezin_lieb": gbl,
        "perimeter": {"alc": pm_lhs, "bound": pm_rhs, "verdict": pm_verdict},
    }
    print(json.dumps(out, indent=2, sort_keys=True))
    all_ok = (
        rep.pass_
        and rep.entropy_correlation_ok
        and lem_ok
        and rk_ok
        and gbl["pass"]
        and pm_verdict != "fail"
    )
    return 0 if all_ok else 1


def cmd_experiment(args) -> int:
    conf = {}
    if args.config:
        try:
            conf = json.loads(Path(args.config).read_text())
        except (OSError, ValueError) as e:
            raise SystemExit(f"error: cannot read config {args.config}: {e}")
    if args.experiment:
        conf["experiment"] = args.experiment
    if "experiment" not in conf:
        raise SystemExit("error: provide --experiment NAME or a config with one")
    # command line overrides the config file
    for key in ("seed", "d", "out", "threads", "trials", "N"):
        val = getattr(args, key, None)
        if val is not None:
            conf[key] = val
    if args.svg is not None:
        conf["svg"] = args.svg
    try:
        config = ExperimentConfig.from_dict(conf)
    except TypeError as e:
        raise SystemExit(f"error: bad config: {e}")
    if config.experiment not in CATALOG:
        raise SystemExit(
            f"error: unknown experiment {config.experiment!r}; "
            f"available: {', '.join(sorted(CATALOG))}"
        )
    table, report = run_experiment(config)
    print(f"wrote {len(table.rows)} rows to {config.out}/{config.experiment}.csv")
    import numpy as np

    checks = [bool(v) for v in report.values() if isinstance(v, (bool, np.bool_))]
    return 0 if all(checks) else 1


def cmd_convert(args) -> int:
    if args.input.endswith(".json") or args.out.endswith(".json"):
        # domain description round trip
        if args.input.endswith(".json") and args.out.endswith(".json"):
            dom = domain_from_json(Path(args.input).read_text())
            Path(args.out).write_text(domain_to_json(dom) + "\n")
            print(f"wrote domain to {args.out}")
            return 0
        raise SystemExit("error: cannot convert between signals and domains")
    ds = _load_signals(args.input)
    write_signals(args.out, ds)
    print(f"wrote {len(ds)} signals to {args.out}")
    return 0


def _add_domain_args(p):
    p.add_argument("--domain", help="domain description JSON file")
    p.add_argument(
        "--rect", nargs=2, type=float, metavar=("W", "H"),
        help="rectangle domain, phase units",
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="tfaug",
        description="Quantum harmonic analysis toolbox for time-series datasets",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a signal dataset")
    p.add_argument("--family", choices=sorted(GENERATORS), required=True)
    p.add_argument("--n", type=int, required=True, help="number of signals")
    p.add_argument("--d", type=int, default=128, help="signal length")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="output file (.csv or binary)")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("metrics", help="entropy and concentration metrics")
    p.add_argument("--in", dest="input", required=True, help="signal file")
    _add_domain_args(p)
    p.set_defaults(fn=cmd_metrics)

    p = sub.add_parser("augment", help="augment a dataset over a domain")
    p.add_argument("--in", dest="input", required=True, help="signal file")
    _add_domain_args(p)
    p.add_argument("--out", required=True, help="output signal file")
    p.set_defaults(fn=cmd_augment)

    p = sub.add_parser("bounds", help="run the inequality checkers")
    p.add_argument("--in", dest="input", required=True, help="signal file")
    _add_domain_args(p)
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("experiment", help="run a catalog experiment")
    p.add_argument("--experiment", help=", ".join(sorted(CATALOG)))
    p.add_argument("--config", help="JSON config file")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--out", default=None, help="output directory")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--N", type=int, default=None, help="dataset size")
    p.add_argument("--threads", type=int, default=None)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--svg", dest="svg", action="store_true", default=None)
    g.add_argument("--no-svg", dest="svg", action="store_false")
    p.set_defaults(fn=cmd_experiment)

    p = sub.add_parser("convert", help="convert between signal file formats")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_convert)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors already; normalize others
        raise SystemExit(2 if e.code not in (0,) else 0)
    try:
        return args.fn(args)
    except SystemExit as e:
        if isinstance(e.code, str):
            print(e.code, file=sys.stderr)
            return 2
        return e.code if e.code is not None else 0
    except (OSError, ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
