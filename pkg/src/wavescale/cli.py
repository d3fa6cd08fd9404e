"""Command-line surface: transfer, inspect, verify, filters, flops.

Results go to stdout, diagnostics and summaries to stderr.  Exit codes:
0 success, 1 validation failure (one greppable "ErrorName: reason" line on
stderr), 2 usage error.
"""

import argparse
import sys

import numpy as np

from .consolidate import consolidate, load_policy
from .container import read_container, write_container
from .errors import WavescaleError
from .filters import FAMILIES, get_filter_bank
from .metrics import flops_saving_ratio, load_curve_csv
from .transfer import DetailPadding, TransferOptions, plan_modules, transfer
from .transform3d import dwt3d, idwt3d


def _build_parser():
    p = argparse.ArgumentParser(
        prog="wavescale",
        description="Rescale transformer checkpoints between sizes with "
                    "3D wavelet analysis and synthesis.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("transfer", help="rescale a checkpoint to a new size")
    t.add_argument("--src", required=True, help="source container file")
    t.add_argument("--policy", required=True,
                   help="grouping policy: preset name or JSON path")
    t.add_argument("--target-layers", type=int, required=True)
    t.add_argument("--target-hidden", type=int, required=True)
    t.add_argument("--target-ffn", type=int, default=None,
                   help="defaults to 4 x target hidden")
    t.add_argument("--wavelet", default="haar", choices=FAMILIES)
    t.add_argument("--padding", default="zero",
                   choices=("zero", "gaussian", "uniform"))
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--gain", type=float, default=1.0)
    t.add_argument("--out", required=True, help="output container file")

    i = sub.add_parser("inspect", help="list a container's tensors")
    i.add_argument("--src", required=True)
    i.add_argument("--policy", default=None)

    v = sub.add_parser("verify", help="reconstruction check over a container")
    v.add_argument("--src", required=True)
    v.add_argument("--wavelet", default="haar", choices=FAMILIES)
    v.add_argument("--policy", default=None)

    f = sub.add_parser("filters", help="print a family's filter coefficients")
    f.add_argument("--family", required=True, choices=FAMILIES)

    r = sub.add_parser("flops", help="FLOPs saving ratio from two curve CSVs")
    r.add_argument("--scratch", required=True)
    r.add_argument("--method", required=True)
    r.add_argument("--target", type=float, required=True)
    r.add_argument("--direction", default="lower", choices=("lower", "higher"))
    return p


def cmd_transfer(args):
    policy = load_policy(args.policy)
    ckpt = read_container(args.src)
    ffn = args.target_ffn if args.target_ffn is not None else 4 * args.target_hidden
    tgt_arch = (args.target_layers, args.target_hidden, ffn)
    opts = TransferOptions(
        family=args.wavelet,
        padding=DetailPadding(strategy=args.padding, seed=args.seed),
        gain=args.gain,
    )

    model = consolidate(ckpt, policy)
    rows = [("group", "src shape", "levels", "tgt shape", "direction")]
    for group, src_shape, levels, tgt_shape, direction in plan_modules(model, tgt_arch):
        rows.append((group, "x".join(map(str, src_shape)),
                     ",".join(map(str, levels)),
                     "x".join(map(str, tgt_shape)), direction))
    widths = [max(len(r[c]) for r in rows) for c in range(5)]
    for r in rows:
        print("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip(),
              file=sys.stderr)

    out = transfer(ckpt, policy, tgt_arch, opts)
    n = write_container(out, args.out)
    print(f"wrote {n} bytes to {args.out}", file=sys.stderr)
    return 0


def cmd_inspect(args):
    ckpt = read_container(args.src)
    print(f"{len(ckpt)} tensors")
    policy = load_policy(args.policy) if args.policy else None
    groups = {}
    if policy is not None:
        matchers = [(rule, rule.matcher()) for rule in policy.rules]
        for name, _ in ckpt.entries:
            for rule, rx in matchers:
                if rx.match(name):
                    groups[name] = rule.group
                    break
    for name, arr in ckpt.entries:
        dims = "x".join(map(str, arr.shape))
        line = f"{name}  {arr.dtype.name}  {dims}"
        if policy is not None:
            line += f"  -> {groups.get(name, '(passthrough)')}"
        print(line)
    if policy is not None:
        model = consolidate(ckpt, policy)
        layers, hidden, ffn = model.arch
        print(f"arch: L={layers} hidden={hidden} ffn={ffn}")
    return 0


def cmd_verify(args):
    ckpt = read_container(args.src)
    bank = get_filter_bank(args.wavelet)
    tol = 1e-5 if args.wavelet == "dmey" else 1e-6
    if args.policy:
        model = consolidate(ckpt, load_policy(args.policy))
        items = sorted(model.modules.items())
    else:
        # no grouping: each tensor checked alone, lifted to rank 3
        items = []
        for name, arr in ckpt.entries:
            a = np.asarray(arr, dtype=np.float64)
            while a.ndim < 3:
                a = a[None, ...]
            items.append((name, a))
    ok = True
    checked = 0
    for name, module in items:
        if any(d % 2 for d in module.shape):
            dims = "x".join(map(str, module.shape))
            print(f"{name}: skipped (odd dims {dims})")
            continue
        err = float(np.max(np.abs(idwt3d(dwt3d(module, bank), bank) - module)))
        checked += 1
        verdict = "ok" if err <= tol else "FAIL"
        if err > tol:
            ok = False
        print(f"{name}: max abs error {err:.3e} {verdict}")
    print(f"verify: {'pass' if ok else 'fail'} "
          f"({checked} checked, {len(items) - checked} skipped, "
          f"wavelet {args.wavelet}, tolerance {tol:g})")
    return 0 if ok else 1


def cmd_filters(args):
    bank = get_filter_bank(args.family)
    for label in ("dec_lo", "dec_hi", "rec_lo", "rec_hi"):
        coeffs = " ".join(f"{c:.17g}" for c in getattr(bank, label))
        print(f"{label}: {coeffs}")
    return 0


def cmd_flops(args):
    direction = {"lower": "lower_is_better", "higher": "higher_is_better"}
    scratch = load_curve_csv(args.scratch, direction[args.direction])
    method = load_curve_csv(args.method, direction[args.direction])
    r = flops_saving_ratio(scratch, method, args.target)
    print(f"{r:.4f}")
    return 0


_COMMANDS = {
    "transfer": cmd_transfer,
    "inspect": cmd_inspect,
    "verify": cmd_verify,
    "filters": cmd_filters,
    "flops": cmd_flops,
}


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (WavescaleError, ValueError) as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
