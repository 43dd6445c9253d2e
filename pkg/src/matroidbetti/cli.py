"""Command line front end.

Subcommands: betti, weights, blocks, cactus, invert, dual-d1, verify-paper.
Reports go to standard output as plain text (default) or versioned JSON
(``--output json``); both are deterministic, byte for byte, for identical
inputs and flags.

Exit codes: 0 success, 1 malformed input, 2 contract violation (bases that
fail the exchange axiom, cactus mode on a non-cactus input, an invalid
cactus Betti vector), 3 cross-check or verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .betti import (
    BettiTable,
    CycleProfile,
    _cactus_profile,
    betti,
    cactus_betti,
    dual_min_distance,
    hilbert_check,
    hochster_betti,
    invert_cactus_betti,
    resolve_algorithm,
)
from .bitset import bits
from .complexes import PrimeField
from .errors import ValidationError
from .graphs import Graph, cycle_matroid, fixture, is_cactus
from .matroid import Matroid, from_bases, multi_uniform, uniform
from .weights import (
    WeightHierarchy,
    block_weights,
    cactus_weights,
    weight_hierarchy,
    weights_via_circuits,
)


class CrosscheckError(Exception):
    """Two routes that must agree did not; mapped to exit code 3."""


_FIXTURE_NAMES = ("g1", "g2", "g3", "g4")


# -- input handling -----------------------------------------------------------


def _from_dict(data: object, label: str) -> tuple[Matroid, Graph | None]:
    if not isinstance(data, dict):
        raise ValueError(f"{label}: expected a JSON object, got {type(data).__name__}")
    if "edges" in data or "vertices" in data:
        g = Graph.from_json_dict(data)
        return cycle_matroid(g), g
    if "uniform" in data:
        pair = data["uniform"]
        if (
            not isinstance(pair, (list, tuple))
            or len(pair) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in pair)
        ):
            raise ValueError(f"{label}: 'uniform' must be a [rank, size] pair")
        return uniform(pair[0], pair[1]), None
    if "blocks" in data:
        profile = data["blocks"]
        if not isinstance(profile, list) or not profile:
            raise ValueError(f"{label}: 'blocks' must be a non-empty list of [rank, size] pairs")
        pairs = []
        for item in profile:
            if (
                not isinstance(item, (list, tuple))
                or len(item) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in item)
            ):
                raise ValueError(f"{label}: block {item!r} is not a [rank, size] pair")
            pairs.append((item[0], item[1]))
        return multi_uniform(pairs), None
    if "bases" in data:
        n = data.get("n")
        if not isinstance(n, int) or isinstance(n, bool):
            raise ValueError(f"{label}: a 'bases' input needs an integer 'n'")
        raw = data["bases"]
        if not isinstance(raw, list):
            raise ValueError(f"{label}: 'bases' must be a list of element lists")
        converted = []
        for basis in raw:
            if not isinstance(basis, list):
                raise ValueError(f"{label}: basis {basis!r} is not a list")
            elems = []
            for e in basis:
                if not isinstance(e, int) or isinstance(e, bool) or not 1 <= e <= n:
                    raise ValueError(
                        f"{label}: element {e!r} out of range 1..{n} (the format is 1-indexed)"
                    )
                elems.append(e - 1)
            converted.append(elems)
        return from_bases(n, converted), None
    raise ValueError(
        f"{label}: unrecognized input object; expected one of the keys "
        "'edges'/'vertices' (graph), 'uniform', 'blocks', or 'bases'"
    )


def _from_text(text: str, label: str) -> tuple[Matroid, Graph | None]:
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{label}: invalid JSON: {exc}") from None
        return _from_dict(data, label)
    g = Graph.from_edge_text(text)
    return cycle_matroid(g), g


def _parse_input(value: str) -> tuple[Matroid, Graph | None, str]:
    """Accepts a fixture name, inline JSON, '-' for stdin, or a file path."""
    if value == "-":
        m, g = _from_text(sys.stdin.read(), "stdin")
        return m, g, "stdin"
    if value.lower() in _FIXTURE_NAMES:
        g = fixture(value)
        return cycle_matroid(g), g, f"fixture {value.lower()}"
    if value.lstrip().startswith("{"):
        m, g = _from_text(value, "inline input")
        return m, g, "inline input"
    with open(value, "r", encoding="utf-8") as fh:
        text = fh.read()
    m, g = _from_text(text, value)
    return m, g, value


# -- output plumbing ----------------------------------------------------------


def _emit(args: argparse.Namespace, payload: dict, lines: list[str]) -> None:
    if args.output == "json":
        payload["schema"] = "1"
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        print("\n".join(lines))


def _fmt_vec(values) -> str:
    vals = list(values)
    return " ".join(str(v) for v in vals) if vals else "(empty)"


def _elements(mask: int) -> list[int]:
    return list(bits(mask))


# -- cross-checks -------------------------------------------------------------


def _betti_routes(
    m: Matroid, fld: PrimeField, primary: BettiTable, resolved: str
) -> dict[str, BettiTable]:
    routes = {resolved: primary}
    if "hochster" not in routes:
        routes["hochster"] = betti(m, "hochster", fld)
    if "blocks" not in routes:
        routes["blocks"] = betti(m, "blocks", fld)
    if "cactus" not in routes and _cactus_profile(m) is not None:
        routes["cactus"] = betti(m, "cactus", fld)
    return routes


def _check_betti_agreement(routes: dict[str, BettiTable]) -> list[str]:
    names = sorted(routes)
    ref = routes["hochster"]
    for name in names:
        if not routes[name].agrees_with(ref):
            raise CrosscheckError(
                f"betti tables disagree: {name} gives {routes[name].global_} "
                f"but hochster gives {ref.global_}"
            )
    return names


def _weights_routes(m: Matroid, primary: WeightHierarchy) -> dict[str, WeightHierarchy]:
    routes = {"sweep": primary, "circuits": weights_via_circuits(m)}
    routes["blocks"] = block_weights(
        weight_hierarchy(b.matroid) for b in m.blocks().blocks
    )
    info = _cactus_profile(m)
    if info is not None:
        routes["cactus"] = cactus_weights(info[0])
    return routes


def _check_weights_agreement(routes: dict[str, WeightHierarchy]) -> list[str]:
    names = sorted(routes)
    ref = routes["sweep"]
    for name in names:
        if routes[name].weights != ref.weights:
            raise CrosscheckError(
                f"weight hierarchies disagree: {name} gives "
                f"{routes[name].weights} but sweep gives {ref.weights}"
            )
    return names


# -- subcommands --------------------------------------------------------------


def _cmd_betti(args: argparse.Namespace) -> int:
    m, _, label = _parse_input(args.input)
    fld = PrimeField(args.field)
    resolved = resolve_algorithm(m, args.algorithm, fine=args.fine)
    table = betti(m, resolved, fld, fine=args.fine)
    payload: dict = {
        "command": "betti",
        "source": label,
        "algorithm": resolved,
        "field": fld.p,
        "table": table.to_json_dict(include_fine=args.fine),
    }
    lo, hi = table.degrees()
    lines = [
        f"source: {label}",
        f"elements: {table.n}",
        f"rank: {table.rank_r}",
        f"algorithm: {resolved}",
        f"field: GF({fld.p})",
        f"global: {_fmt_vec(table.global_)}",
        f"degrees: {lo}..{hi}",
        f"resolution: {table.resolution_text()}",
    ]
    if args.fine and table.fine is not None:
        for (i, sigma), v in sorted(table.fine.items()):
            elems = ",".join(str(e) for e in _elements(sigma))
            lines.append(f"beta[{i}, {{{elems}}}] = {v}")
    if args.crosscheck:
        routes = _betti_routes(m, fld, table, resolved)
        names = _check_betti_agreement(routes)
        hilbert_ok = hilbert_check(table, m)
        if not hilbert_ok:
            raise CrosscheckError(
                "the Betti table fails the Hilbert series consistency check"
            )
        payload["crosscheck"] = {"algorithms": names, "agree": True, "hilbert": True}
        lines.append(
            f"crosscheck: agreement across {', '.join(names)}; hilbert check passed"
        )
    _emit(args, payload, lines)
    return 0


def _cmd_weights(args: argparse.Namespace) -> int:
    m, _, label = _parse_input(args.input)
    hierarchy = weight_hierarchy(m)
    payload: dict = {
        "command": "weights",
        "source": label,
        "n": m.n,
        "rank": m.full_rank,
        "d": list(hierarchy.weights),
    }
    lines = [
        f"source: {label}",
        f"elements: {m.n}",
        f"rank: {m.full_rank}",
        f"weights: {_fmt_vec(hierarchy.weights)}",
    ]
    if args.crosscheck:
        routes = _weights_routes(m, hierarchy)
        names = _check_weights_agreement(routes)
        payload["crosscheck"] = {"routes": names, "agree": True}
        lines.append(f"crosscheck: agreement across {', '.join(names)}")
    _emit(args, payload, lines)
    return 0


def _block_kind(bm: Matroid) -> str:
    k = bm.n
    if k == 1:
        return "loop" if bm.full_rank == 0 else "coloop"
    full = bm.full_mask
    if bm.rank(full) == k - 1 and all(
        bm.rank(full ^ (1 << e)) == k - 1 for e in range(k)
    ):
        return "circuit"
    return "general"


def _cmd_blocks(args: argparse.Namespace) -> int:
    m, _, label = _parse_input(args.input)
    part = m.blocks()
    rows = []
    for block in part.blocks:
        rows.append(
            {
                "elements": _elements(block.members),
                "size": block.matroid.n,
                "rank": block.matroid.full_rank,
                "kind": _block_kind(block.matroid),
            }
        )
    payload = {"command": "blocks", "source": label, "count": len(rows), "blocks": rows}
    lines = [f"source: {label}", f"elements: {m.n}", f"blocks: {len(rows)}"]
    for idx, row in enumerate(rows):
        elems = ",".join(str(e) for e in row["elements"])
        lines.append(
            f"block {idx}: elements {elems} (size {row['size']}, "
            f"rank {row['rank']}, {row['kind']})"
        )
    _emit(args, payload, lines)
    return 0


def _cmd_cactus(args: argparse.Namespace) -> int:
    m, g, label = _parse_input(args.input)
    if g is None:
        raise ValueError("the cactus command needs a graph input")
    cert = is_cactus(g)
    payload: dict = {
        "command": "cactus",
        "source": label,
        "is_cactus": cert.is_cactus,
        "cycles": [_elements(c) for c in cert.cycles],
        "bridges": [_elements(b)[0] for b in cert.bridges],
        "loops": cert.loops,
    }
    lines = [
        f"source: {label}",
        f"is_cactus: {'yes' if cert.is_cactus else 'no'}",
    ]
    if not cert.is_cactus:
        payload["offending"] = [_elements(o) for o in cert.offending]
        for o in cert.offending:
            elems = ",".join(str(e) for e in _elements(o))
            lines.append(f"offending block: edges {elems}")
        _emit(args, payload, lines)
        return 0
    profile = cert.profile()
    lines.append(f"profile: {_fmt_vec(profile.lengths)}")
    lines.append(f"bridges: {len(cert.bridges)}")
    lines.append(f"loops: {cert.loops}")
    payload["profile"] = list(profile.lengths)
    table = betti(m, "cactus")
    hierarchy = cactus_weights(profile.lengths)
    payload["table"] = table.to_json_dict()
    payload["d"] = list(hierarchy.weights)
    lines.append(f"global: {_fmt_vec(table.global_)}")
    lines.append(f"weights: {_fmt_vec(hierarchy.weights)}")
    lines.append(f"resolution: {table.resolution_text()}")
    _emit(args, payload, lines)
    return 0


def _parse_int_list(text: str) -> list[int]:
    parts = [p for chunk in text.split(",") for p in chunk.split()]
    if not parts:
        raise ValueError("empty integer list")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"not a list of integers: {text!r}") from None


def _cmd_invert(args: argparse.Namespace) -> int:
    values = _parse_int_list(args.betti)
    if args.loops < 0:
        raise ValueError("--loops must be non-negative")
    profile = invert_cactus_betti(values, args.loops)
    roundtrip = cactus_betti(profile)
    payload = {
        "command": "invert",
        "betti": values,
        "loops": args.loops,
        "lengths": list(profile.lengths),
        "sigma": list(profile.sigma),
        "roundtrip": list(roundtrip.global_),
    }
    lines = [
        f"input betti: {_fmt_vec(values)}",
        f"loops: {args.loops}",
        f"cycle lengths: {_fmt_vec(profile.lengths)}",
        f"sigma: {_fmt_vec(profile.sigma)}",
        f"roundtrip betti: {_fmt_vec(roundtrip.global_)}",
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_dual_d1(args: argparse.Namespace) -> int:
    m, _, label = _parse_input(args.input)
    d1 = dual_min_distance(m)
    payload = {"command": "dual-d1", "source": label, "d1": d1}
    lines = [f"source: {label}", f"dual minimum distance: {d1}"]
    _emit(args, payload, lines)
    return 0


# -- the reproduction battery -------------------------------------------------


def _two_triangles() -> Graph:
    return Graph(5, ((0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)))


def _verify_checks() -> list[tuple[str, object, object]]:
    """Every numeric claim the battery reproduces: (name, expected, got)."""
    checks: list[tuple[str, object, object]] = []
    tables: dict[str, BettiTable] = {}
    matroids: dict[str, Matroid] = {}

    for name, glob, degs, ws in (
        ("g1", (393, 1459, 2187, 1652, 628, 96), (9, 14), (3, 6, 8, 11, 14)),
        ("g2", (393, 1459, 2187, 1652, 628, 96), (9, 14), (3, 6, 9, 11, 14)),
        ("g3", (41, 92, 70, 18), (6, 9), (3, 6, 9)),
        ("g4", (39, 86, 64, 16), (6, 9), (3, 6, 9)),
    ):
        m = cycle_matroid(fixture(name))
        matroids[name] = m
        t = hochster_betti(m)
        tables[name] = t
        checks.append((f"{name} global Betti numbers", glob, t.global_))
        checks.append((f"{name} degree span", degs, t.degrees()))
        checks.append((f"{name} weight hierarchy", ws, weight_hierarchy(m).weights))

    checks.append(("g1 dual minimum distance", 2, dual_min_distance(matroids["g1"])))
    checks.append(("g2 dual minimum distance", 2, dual_min_distance(matroids["g2"])))
    checks.append(
        ("g1 is not a cactus", False, is_cactus(fixture("g1")).is_cactus)
    )

    two = _two_triangles()
    mtwo = cycle_matroid(two)
    ttwo = hochster_betti(mtwo)
    tables["two triangles"] = ttwo
    matroids["two triangles"] = mtwo
    checks.append(("two-triangle cactus recognized", True, is_cactus(two).is_cactus))
    checks.append(
        ("two-triangle profile", (3, 3), is_cactus(two).profile().lengths)
    )
    checks.append(("two-triangle global Betti numbers", (9, 12, 4), ttwo.global_))
    checks.append(
        (
            "two-triangle closed form",
            (9, 12, 4),
            cactus_betti(CycleProfile((3, 3))).global_,
        )
    )
    checks.append(
        ("two-triangle block product", True, betti(mtwo, "blocks").agrees_with(ttwo))
    )
    checks.append(
        ("two-triangle weight hierarchy", (3, 6), weight_hierarchy(mtwo).weights)
    )
    checks.append(("two-triangle basis count", 9, len(mtwo.bases())))

    profile345 = CycleProfile((3, 4, 5))
    checks.append(
        ("profile 3,4,5 closed form", (60, 133, 98, 24), cactus_betti(profile345).global_)
    )
    checks.append(
        ("profile 3,4,5 symmetric polynomials", (1, 12, 47, 60), profile345.sigma)
    )
    checks.append(
        ("profile 3,4,5 weights", (3, 7, 12), cactus_weights((3, 4, 5)).weights)
    )

    for mlen in (3, 4, 5, 6):
        cm = cycle_matroid(Graph(mlen, tuple((i, (i + 1) % mlen) for i in range(mlen))))
        checks.append(
            (f"single {mlen}-cycle resolution", (mlen, mlen - 1), hochster_betti(cm).global_)
        )

    checks.append(
        (
            "inversion of (9, 12, 4)",
            (3, 3),
            invert_cactus_betti((9, 12, 4), 0).lengths,
        )
    )
    checks.append(
        (
            "inversion of (60, 133, 98, 24)",
            (3, 4, 5),
            invert_cactus_betti((60, 133, 98, 24), 0).lengths,
        )
    )
    checks.append(
        (
            "inversion with one loop of (3, 2, 0)",
            (1, 3),
            invert_cactus_betti((3, 2, 0), 1).lengths,
        )
    )

    for name, table in sorted(tables.items()):
        checks.append(
            (f"{name} Hilbert series consistency", True, hilbert_check(table, matroids[name]))
        )
    return checks


def _cmd_verify(args: argparse.Namespace) -> int:
    checks = _verify_checks()
    failed = 0
    rows = []
    lines = []
    for name, expected, got in checks:
        ok = expected == got
        if not ok:
            failed += 1
        rows.append(
            {"name": name, "pass": ok, "expected": str(expected), "got": str(got)}
        )
        status = "ok  " if ok else "FAIL"
        detail = "" if ok else f"  (expected {expected}, got {got})"
        lines.append(f"{status}  {name}{detail}")
    lines.append(
        f"passed {len(checks) - failed} of {len(checks)} checks"
        + ("" if not failed else f"; {failed} FAILED")
    )
    payload = {
        "command": "verify-paper",
        "results": rows,
        "failed": failed,
        "total": len(checks),
    }
    _emit(args, payload, lines)
    return 3 if failed else 0


# -- argument parsing ---------------------------------------------------------


def _add_common(sub: argparse.ArgumentParser, with_input: bool = True) -> None:
    if with_input:
        sub.add_argument(
            "--input",
            required=True,
            help="fixture name (g1..g4), file path, inline JSON, or '-' for stdin",
        )
    sub.add_argument(
        "--output",
        choices=("text", "json"),
        default="text",
        help="report format (default: text)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matroidbetti",
        description=(
            "Exact Betti tables, weight hierarchies, block decompositions and "
            "cactus inversion for matroid basis-monomial ideals."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_betti = sub.add_parser("betti", help="graded Betti numbers")
    _add_common(p_betti)
    p_betti.add_argument(
        "--algorithm",
        choices=("auto", "hochster", "blocks", "cactus"),
        default="auto",
    )
    p_betti.add_argument("--field", type=int, default=2, help="prime field order")
    p_betti.add_argument("--fine", action="store_true", help="include the fine table")
    p_betti.add_argument(
        "--crosscheck",
        action="store_true",
        help="run all applicable algorithms and the Hilbert check; exit 3 on mismatch",
    )
    p_betti.set_defaults(func=_cmd_betti)

    p_weights = sub.add_parser("weights", help="higher weight hierarchy")
    _add_common(p_weights)
    p_weights.add_argument(
        "--crosscheck",
        action="store_true",
        help="compare the subset sweep against the circuit-family and block routes",
    )
    p_weights.set_defaults(func=_cmd_weights)

    p_blocks = sub.add_parser("blocks", help="connectivity block decomposition")
    _add_common(p_blocks)
    p_blocks.set_defaults(func=_cmd_blocks)

    p_cactus = sub.add_parser("cactus", help="cactus recognition and closed forms")
    _add_common(p_cactus)
    p_cactus.set_defaults(func=_cmd_cactus)

    p_invert = sub.add_parser("invert", help="recover cycle lengths from Betti numbers")
    p_invert.add_argument(
        "--betti", required=True, help="comma-separated global Betti numbers"
    )
    p_invert.add_argument(
        "--loops", required=True, type=int, help="number of loops (length-1 cycles)"
    )
    _add_common(p_invert, with_input=False)
    p_invert.set_defaults(func=_cmd_invert)

    p_d1 = sub.add_parser("dual-d1", help="minimum distance of the dual")
    _add_common(p_d1)
    p_d1.set_defaults(func=_cmd_dual_d1)

    p_verify = sub.add_parser(
        "verify-paper", help="run the built-in reproduction suite on the bundled fixtures"
    )
    _add_common(p_verify, with_input=False)
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CrosscheckError as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return 3
    except ValidationError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
