"""netrel CLI: exact two-terminal reliability of heterogeneous-arc networks."""

import argparse
import json
import logging
import sys

from . import config as config_mod
from . import report as reporter
from .compare import compare_engines
from .engines import COMPLETE_RULES, METHODS, MP_ENGINES, oracle_reliability, rie_reliability
from .errors import EngineDisagreementError, ReliabilityError
from .generator import GeneratorConfig, generate
from .network import format_network, load_network, reduce_arcs
from .paths import direct_mp, directed_mps, enumerate_undirected_mps, load_mp_file

PROG = "netrel"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{PROG}: error[E_USAGE]: {message}\n")


def _mps_for(args, net, cfg):
    order = load_mp_file(args.mp_order, net) if getattr(args, "mp_order", None) else None
    return directed_mps(net, order=order, max_mps=cfg["engines"]["max_mps"])


def _range(text):
    try:
        lo, hi = (float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'a,b', got {text!r}") from None
    return lo, hi


def cmd_compute(args, cfg):
    """Compute reliability with one engine."""
    net = load_network(args.file)
    if args.method == "oracle":
        result = oracle_reliability(
            net, max_m_star=cfg["oracle"]["max_m_star"], workers=cfg["oracle"]["workers"]
        )
    else:
        mps = _mps_for(args, net, cfg)
        engine = MP_ENGINES[args.method]
        kwargs = {"max_mps": cfg["engines"]["max_mps"]}
        if args.method == "rie":
            kwargs["complete_rule"] = args.complete_rule or cfg["engines"]["complete_rule"]
        result = engine(net, mps, **kwargs)

    if args.json:
        print(reporter.report_json(result, indent=cfg["output"]["json_indent"]))
    else:
        print(reporter.report_table(result, digits=cfg["output"]["float_digits"]))
    return 0


def cmd_mps(args, cfg):
    """List undirected and directed MPs in enumeration order."""
    net = load_network(args.file)
    undirected = enumerate_undirected_mps(net, limit=cfg["engines"]["max_mps"])
    directed = [direct_mp(q, net) for q in undirected]
    print(f"{len(undirected)} minimal paths from {net.source} to {net.sink}\n")
    print(reporter.mp_listing(undirected, directed))
    return 0


def cmd_compare(args, cfg):
    """Run all four engines and check agreement."""
    net = load_network(args.file)
    mps = _mps_for(args, net, cfg)
    try:
        comparison = compare_engines(
            net,
            mps,
            tolerance=cfg["engines"]["tolerance"],
            complete_rule=cfg["engines"]["complete_rule"],
            max_m_star=cfg["oracle"]["max_m_star"],
            workers=cfg["oracle"]["workers"],
        )
        status = 0
    except EngineDisagreementError as e:
        comparison = e.comparison
        status = e.exit_status
        print(f"{PROG}: error[{e.code}]: {e}", file=sys.stderr)

    if args.json:
        print(json.dumps(comparison.to_dict(), indent=cfg["output"]["json_indent"], sort_keys=True))
    else:
        print(f"\n{'=' * 60}")
        print(f"  netrel compare: {args.file}")
        print(f"  n={net.n}  arcs={net.arc_count}  m*={reduce_arcs(net).m_star}  p={len(mps)}")
        print(f"{'=' * 60}\n")
        print(reporter.comparison_table(comparison, digits=cfg["output"]["float_digits"]))
    return status


def cmd_random(args, cfg):
    """Write a seeded random network file."""
    gen_cfg = GeneratorConfig(
        n=args.nodes,
        arc_count=args.arcs,
        seed=args.seed,
        prob_range_fwd=args.pfwd,
        prob_range_bwd=args.pbwd,
        require_connected=not args.allow_disconnected,
        homogeneous=args.homogeneous,
        max_retries=cfg["generator"]["max_retries"],
    )
    net = generate(gen_cfg)
    comment = (f"generated by netrel random --nodes {args.nodes} --arcs {args.arcs} "
               f"--seed {args.seed}")
    text = format_network(net, comment=comment)
    try:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(text)
    except OSError as e:
        raise ReliabilityError(f"cannot write {args.output}: {e.strerror or e}") from e
    print(f"Wrote {args.output}: n={net.n}, arcs={net.arc_count}, source={net.source}, sink={net.sink}")
    return 0


def cmd_trace(args, cfg):
    """Per-term RIE log in creation order."""
    net = load_network(args.file)
    mps = _mps_for(args, net, cfg)
    rows = []
    result = rie_reliability(
        net,
        mps,
        complete_rule=args.complete_rule or cfg["engines"]["complete_rule"],
        on_term=rows.append,
        max_mps=cfg["engines"]["max_mps"],
    )
    digits = cfg["output"]["float_digits"]
    print(reporter.trace_table(rows, len(mps), digits=digits))
    print()
    print(f"R = {result.reliability:.{digits}f}  "
          f"(terms {result.num_terms}, complete eliminated {result.complete_terms_discarded}, "
          f"net sign {result.complete_net_sign})")
    return 0


def build_parser():
    parser = _Parser(
        prog=PROG,
        description="Exact two-terminal reliability for heterogeneous-arc binary-state networks",
    )
    parser.add_argument("--config", default=None, help="Path to config.yaml")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")

    sub = parser.add_subparsers(dest="command")

    # compute
    p_compute = sub.add_parser("compute", help="Compute reliability with one engine")
    p_compute.add_argument("file", help="Network file")
    p_compute.add_argument("--method", choices=METHODS, default="rie", help="Engine (default: rie)")
    p_compute.add_argument("--json", action="store_true", help="JSON output")
    p_compute.add_argument("--mp-order", default=None, help="MP file pinning the MP order")
    p_compute.add_argument("--complete-rule", choices=COMPLETE_RULES, default=None,
                           help="RIE complete-term rule (default from config)")

    # mps
    p_mps = sub.add_parser("mps", help="List undirected and directed MPs")
    p_mps.add_argument("file", help="Network file")

    # compare
    p_compare = sub.add_parser("compare", help="Run all engines and check agreement")
    p_compare.add_argument("file", help="Network file")
    p_compare.add_argument("--json", action="store_true", help="JSON output")
    p_compare.add_argument("--mp-order", default=None, help="MP file pinning the MP order")

    # random
    p_random = sub.add_parser("random", help="Generate a seeded random network file")
    p_random.add_argument("--nodes", type=int, required=True)
    p_random.add_argument("--arcs", type=int, required=True)
    p_random.add_argument("--seed", type=int, required=True)
    p_random.add_argument("--pfwd", type=_range, default=(0.0, 1.0), help="p_fwd range 'a,b'")
    p_random.add_argument("--pbwd", type=_range, default=(0.0, 1.0), help="p_bwd range 'a,b'")
    p_random.add_argument("--homogeneous", action="store_true", help="p_bwd equals p_fwd")
    p_random.add_argument("--allow-disconnected", action="store_true",
                          help="Do not resample when the sink is unreachable")
    p_random.add_argument("-o", "--output", required=True, help="Output network file")

    # trace
    p_trace = sub.add_parser("trace", help="Per-term RIE trace")
    p_trace.add_argument("file", help="Network file")
    p_trace.add_argument("--mp-order", default=None, help="MP file pinning the MP order")
    p_trace.add_argument("--complete-rule", choices=COMPLETE_RULES, default=None)

    return parser


COMMANDS = {
    "compute": cmd_compute,
    "mps": cmd_mps,
    "compare": cmd_compare,
    "random": cmd_random,
    "trace": cmd_trace,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help(sys.stderr)
        return 2

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        cfg = config_mod.load_config(args.config)
        return COMMANDS[args.command](args, cfg)
    except ReliabilityError as e:
        print(f"{PROG}: error[{e.code}]: {e}", file=sys.stderr)
        return e.exit_status


if __name__ == "__main__":
    sys.exit(main())
