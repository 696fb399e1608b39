"""Command-line front end and table file I/O.

Commands:
  build   construct a family and write its Cayley table file
  rank    compute requested ranks of a table file or a built family
  prime   smallest proper prime subset and its complement subsemigroup
  verify  reproduction suites (brandt, on, chain, duality)
  oracle  definition-based large rank (no prime-subset machinery)
  info    order, idempotents, indecomposable elements

Table file format (plain text, canonical writer is byte-stable):
  semigroup <m>
  <m lines of m whitespace-separated 0-based indices>
  labels                 (optional section)
  <m label lines>

Reports are deterministic key=value lines, one fact per line, followed by
human-readable lines prefixed with '# '. The elapsed= line is the only
line excluded from the stability contract.

Exit codes: 0 ok, 2 verification mismatch, 3 parse error, 4 guard
exceeded, 64 usage error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from time import perf_counter

from . import config
from .core import (
    FiniteSemigroup,
    GuardError,
    NotAssociativeError,
    elements_of,
    idempotents,
    indecomposable_elements,
    is_prime_subset,
    is_subsemigroup,
    complement_mask,
    make_semigroup,
)
from .families import (
    brandt,
    cyclic_group,
    full_transformation,
    monogenic,
    order_preserving_singular,
    standard_corpus,
    symmetric_group,
)
from .prime_search import NoProperPrimeSubsetError, smallest_proper_prime_subset
from .ranks import closed_form, compute_rank_report, large_rank_direct

EXIT_OK = 0
EXIT_MISMATCH = 2
EXIT_PARSE = 3
EXIT_GUARD = 4
EXIT_USAGE = 64


class TableParseError(ValueError):
    """A table file could not be parsed into a valid semigroup."""


@dataclass
class RunConfig:
    threads: int = 1
    guard_subsets: int | None = None
    trusted: bool = False


# ---------------------------------------------------------------------------
# Table file format


def format_table(S: FiniteSemigroup) -> str:
    lines = [f"semigroup {S.order}"]
    for row in S.cayley:
        lines.append(" ".join(str(v) for v in row))
    if S.labels is not None:
        lines.append("labels")
        lines.extend(S.labels)
    return "\n".join(lines) + "\n"


def write_table_file(path: str, S: FiniteSemigroup) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_table(S))


def parse_table(text: str, name: str | None = None, trusted: bool = False) -> FiniteSemigroup:
    lines = text.splitlines()
    if not lines:
        raise TableParseError("empty table file")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "semigroup":
        raise TableParseError(f"bad header {lines[0]!r}, expected 'semigroup <m>'")
    try:
        m = int(header[1])
    except ValueError:
        raise TableParseError(f"bad order {header[1]!r} in header") from None
    if m < 1:
        raise TableParseError(f"order must be >= 1, got {m}")
    if len(lines) < 1 + m:
        raise TableParseError(f"expected {m} table rows, found {len(lines) - 1}")
    table = []
    for r in range(m):
        parts = lines[1 + r].split()
        if len(parts) != m:
            raise TableParseError(f"row {r} has {len(parts)} entries, expected {m}")
        try:
            table.append([int(p) for p in parts])
        except ValueError:
            raise TableParseError(f"non-integer entry in row {r}") from None
    labels = None
    rest = lines[1 + m :]
    if rest:
        if rest[0] != "labels":
            raise TableParseError(f"unexpected line {rest[0]!r} after table rows")
        if len(rest) != 1 + m:
            raise TableParseError(f"expected {m} label lines, found {len(rest) - 1}")
        labels = rest[1:]
    try:
        return make_semigroup(table, labels=labels, name=name, trusted=trusted)
    except NotAssociativeError as exc:
        raise TableParseError(str(exc)) from exc
    except ValueError as exc:
        raise TableParseError(str(exc)) from exc


def read_table_file(path: str, trusted: bool = False) -> FiniteSemigroup:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise TableParseError(f"cannot read {path}: {exc}") from exc
    try:
        return parse_table(text, name=path, trusted=trusted)
    except TableParseError as exc:
        raise TableParseError(f"{path}: {exc}") from None


# ---------------------------------------------------------------------------
# Family construction from CLI parameters

FAMILIES = ("brandt", "bn", "monogenic", "tn", "on", "cyclic", "symmetric")


def parse_group_name(token: str):
    if len(token) >= 2 and token[0] in "ZS" and token[1:].isdigit():
        k = int(token[1:])
        return cyclic_group(k) if token[0] == "Z" else symmetric_group(k)
    raise GuardError(f"bad group name {token!r}, expected Z<k> or S<k>")


def build_family(args) -> tuple[FiniteSemigroup, list[tuple[str, str]]]:
    """Construct the requested family; returns (semigroup, param pairs)."""
    family = args.family
    if family not in FAMILIES:
        raise GuardError(f"unknown family {family!r}, expected one of {FAMILIES}")
    if family == "bn":
        _require(args, "n")
        S, _ = brandt(cyclic_group(1), args.n)
        return S, [("family", "bn"), ("n", str(args.n))]
    if family == "brandt":
        _require(args, "n")
        if not args.group:
            raise GuardError("family brandt needs --group (e.g. Z2, S3)")
        G = parse_group_name(args.group)
        S, _ = brandt(G, args.n)
        return S, [("family", "brandt"), ("group", args.group), ("n", str(args.n))]
    if family == "monogenic":
        if args.index is None or args.period is None:
            raise GuardError("family monogenic needs --index and --period")
        S = monogenic(args.index, args.period)
        return S, [
            ("family", "monogenic"),
            ("index", str(args.index)),
            ("period", str(args.period)),
        ]
    if family == "tn":
        _require(args, "n")
        S, _ = full_transformation(args.n)
        return S, [("family", "tn"), ("n", str(args.n))]
    if family == "on":
        _require(args, "n")
        S, _ = order_preserving_singular(args.n)
        return S, [("family", "on"), ("n", str(args.n))]
    if family == "cyclic":
        _require(args, "m")
        return cyclic_group(args.m).underlying, [("family", "cyclic"), ("m", str(args.m))]
    if family == "symmetric":
        _require(args, "m")
        return symmetric_group(args.m).underlying, [
            ("family", "symmetric"),
            ("m", str(args.m)),
        ]
    raise AssertionError(family)


def _require(args, attr: str) -> None:
    if getattr(args, attr, None) is None:
        raise GuardError(f"family {args.family!r} needs --{attr}")


def resolve_input(args) -> tuple[FiniteSemigroup, list[tuple[str, str]]]:
    if getattr(args, "table", None):
        S = read_table_file(args.table, trusted=args.trusted)
        return S, [("table", args.table)]
    if getattr(args, "family", None):
        return build_family(args)
    raise GuardError("give a table file or --family with its parameters")


def _closed_form_for(params: list[tuple[str, str]]) -> int | None:
    kv = dict(params)
    family = kv.get("family")
    if family == "bn":
        n = int(kv["n"])
        return closed_form("brandt", n=n, group_order=1) if n >= 2 else None
    if family == "brandt":
        n = int(kv["n"])
        if n < 2:
            return None
        G = parse_group_name(kv["group"])
        return closed_form("brandt", n=n, group_order=G.order)
    if family == "on":
        return closed_form("order_preserving", n=int(kv["n"]))
    return None


# ---------------------------------------------------------------------------
# Reports


def emit(key: str, value) -> None:
    print(f"{key}={value}")


def emit_params(params: list[tuple[str, str]]) -> None:
    for key, value in params:
        emit(key, value)


def human(line: str) -> None:
    print(f"# {line}")


# ---------------------------------------------------------------------------
# Commands


def cmd_build(args) -> int:
    S, params = build_family(args)
    emit("command", "build")
    emit_params(params)
    emit("m", S.order)
    if args.out:
        write_table_file(args.out, S)
        emit("out", args.out)
        human(f"wrote {S.name or 'semigroup'} of order {S.order} to {args.out}")
    else:
        sys.stdout.write(format_table(S))
    return EXIT_OK


def cmd_rank(args) -> int:
    start = perf_counter()
    S, params = resolve_input(args)
    which = []
    if args.all:
        which = ["r1", "r2", "r3", "r4", "r5"]
    else:
        for r in ("r1", "r2", "r3", "r4", "r5"):
            if getattr(args, r):
                which.append(r)
        if not which:
            which = ["r5"]
    report = compute_rank_report(
        S,
        which=tuple(which),
        threads=args.threads,
        max_candidates=args.guard_subsets,
    )
    emit("command", "rank")
    emit_params(params)
    emit("m", S.order)
    rows = []
    for r in which:
        value = getattr(report, r)
        if r == "r5":
            emit("r5_search", value)
            formula = _closed_form_for(params)
            if formula is not None:
                emit("r5_formula", formula)
            if report.r5_prime_witness is not None:
                emit("witness_prime", S.labels_of(report.r5_prime_witness))
                emit("witness_subsemigroup", S.labels_of(report.r5_subsemigroup_witness))
            if report.r5_search is not None:
                emit("nodes", report.r5_search.nodes_visited)
            rows.append(("r5", value, report.r5_prime_witness))
        else:
            emit(r, value)
            witness = getattr(
                report, "r1_certificate" if r == "r1" else f"{r}_witness"
            )
            if witness is not None:
                key = "certificate_r1" if r == "r1" else f"witness_{r}"
                emit(key, S.labels_of(witness))
            rows.append((r, value, witness))
    mismatch = False
    if args.oracle:
        direct = large_rank_direct(S)
        emit("r5_direct", direct)
        if report.r5 is not None:
            status = "MATCH" if direct == report.r5 else "MISMATCH"
            emit("oracle_status", status)
            mismatch = status == "MISMATCH"
    emit("elapsed", f"{perf_counter() - start:.3f}")
    human(f"{S.name or 'semigroup'}: order {S.order}")
    for r, value, witness in rows:
        shown = S.labels_of(witness) if witness is not None else "-"
        human(f"{r} = {value}   witness: {shown}")
    return EXIT_MISMATCH if mismatch else EXIT_OK


def cmd_prime(args) -> int:
    start = perf_counter()
    S, params = resolve_input(args)
    result = smallest_proper_prime_subset(S, threads=args.threads)
    complement = complement_mask(result.witness, S.order)
    emit("command", "prime")
    emit_params(params)
    emit("m", S.order)
    emit("prime_size", result.size)
    emit("prime_witness", S.labels_of(result.witness))
    emit("subsemigroup_size", S.order - result.size)
    emit("subsemigroup_witness", S.labels_of(complement))
    emit("nodes", result.nodes_visited)
    emit("proven_optimal", str(result.proven_optimal).lower())
    emit("elapsed", f"{perf_counter() - start:.3f}")
    human(
        f"smallest proper prime subset has {result.size} of {S.order} elements; "
        f"complement is a largest proper subsemigroup"
    )
    return EXIT_OK


def cmd_oracle(args) -> int:
    start = perf_counter()
    S, params = resolve_input(args)
    value = large_rank_direct(S)
    emit("command", "oracle")
    emit_params(params)
    emit("m", S.order)
    emit("r5_direct", value)
    emit("elapsed", f"{perf_counter() - start:.3f}")
    human(f"definition scan: every {value}-subset generates, some {value - 1}-subset does not"
          if value > 1 else "definition scan: every 1-subset generates")
    return EXIT_OK


def cmd_info(args) -> int:
    S, params = resolve_input(args)
    idem = idempotents(S)
    indec = indecomposable_elements(S)
    emit("command", "info")
    emit_params(params)
    emit("m", S.order)
    if S.name:
        emit("name", S.name)
    emit("idempotent_count", idem.bit_count())
    emit("idempotents", S.labels_of(idem))
    emit("indecomposable_count", indec.bit_count())
    emit("indecomposables", S.labels_of(indec))
    human(f"order {S.order}, {idem.bit_count()} idempotents, "
          f"{indec.bit_count()} indecomposable elements")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Verification suites


def parse_range(token: str) -> list[int]:
    """Accepts '3', '2..5' (inclusive) and '2,4,5'."""
    if ".." in token:
        lo, _, hi = token.partition("..")
        return list(range(int(lo), int(hi) + 1))
    if "," in token:
        return [int(t) for t in token.split(",")]
    return [int(token)]


def _verify_brandt(args) -> tuple[int, int]:
    groups = args.groups.split(",") if args.groups else ["Z1", "Z2"]
    ns = parse_range(args.n) if args.n else [2, 3]
    checked = mismatches = 0
    for gname in groups:
        G = parse_group_name(gname)
        for n in ns:
            if n < 2:
                raise GuardError(f"brandt verification needs n >= 2, got {n}")
            S, _ = brandt(G, n)
            result = smallest_proper_prime_subset(S, threads=args.threads)
            search = S.order - result.size + 1
            formula = closed_form("brandt", n=n, group_order=G.order)
            status = "MATCH" if search == formula else "MISMATCH"
            checked += 1
            mismatches += status == "MISMATCH"
            print(
                f"brandt group={gname} n={n} m={S.order} "
                f"search={search} formula={formula} {status}"
            )
    return checked, mismatches


def _verify_on(args) -> tuple[int, int]:
    ns = parse_range(args.n) if args.n else [3, 4]
    checked = mismatches = 0
    for n in ns:
        if n < 3:
            raise GuardError(f"on verification needs n >= 3, got {n}")
        S, _ = order_preserving_singular(n)
        result = smallest_proper_prime_subset(S, threads=args.threads)
        search = S.order - result.size + 1
        formula = closed_form("order_preserving", n=n)
        status = "MATCH" if search == formula else "MISMATCH"
        checked += 1
        mismatches += status == "MISMATCH"
        print(f"on n={n} m={S.order} search={search} formula={formula} {status}")
    return checked, mismatches


def _verify_chain(args) -> tuple[int, int]:
    from .ranks import rank_chain_check

    checked = mismatches = 0
    for name, S in standard_corpus():
        if S.order > 10:
            continue
        ok, report = rank_chain_check(S, threads=args.threads)
        status = "MATCH" if ok else "MISMATCH"
        checked += 1
        mismatches += not ok
        print(
            f"chain name={name} m={S.order} r1={report.r1} r2={report.r2} "
            f"r3={report.r3} r4={report.r4} r5={report.r5} {status}"
        )
    return checked, mismatches


def _verify_duality(args) -> tuple[int, int]:
    if isinstance(getattr(args, "n", None), str):
        ns = parse_range(args.n)
        if len(ns) != 1:
            raise GuardError("duality takes a single --n, not a range")
        args.n = ns[0]
    S, params = resolve_input(args)
    m = S.order
    guard = args.guard_subsets or config.ORACLE_CANDIDATE_GUARD
    total = (1 << m) - 2
    if total > guard:
        raise GuardError(
            f"duality scan over {total} subsets exceeds guard {guard}"
        )
    bad = 0
    for mask in range(1, (1 << m) - 1):  # nonempty proper subsets
        if is_prime_subset(S, mask) != is_subsemigroup(S, complement_mask(mask, m)):
            bad += 1
    status = "MATCH" if bad == 0 else "MISMATCH"
    name = dict(params).get("family") or dict(params).get("table") or "?"
    print(f"duality input={name} m={m} subsets={max(total, 0)} violations={bad} {status}")
    return 1, int(bad > 0)


def cmd_verify(args) -> int:
    start = perf_counter()
    emit("command", "verify")
    emit("suite", args.suite)
    if args.suite == "brandt":
        checked, mismatches = _verify_brandt(args)
    elif args.suite == "on":
        checked, mismatches = _verify_on(args)
    elif args.suite == "chain":
        checked, mismatches = _verify_chain(args)
    elif args.suite == "duality":
        checked, mismatches = _verify_duality(args)
    else:
        raise GuardError(f"unknown verification suite {args.suite!r}")
    emit("verified", checked)
    emit("mismatches", mismatches)
    emit("elapsed", f"{perf_counter() - start:.3f}")
    return EXIT_MISMATCH if mismatches else EXIT_OK


# ---------------------------------------------------------------------------
# Argument parsing


class _Parser(argparse.ArgumentParser):
    # usage problems exit 64 so the contractual codes 2/3/4 stay unambiguous
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_input_options(p: argparse.ArgumentParser, with_table: bool = True) -> None:
    if with_table:
        p.add_argument("table", nargs="?", help="Cayley table file")
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--group", help="group name for brandt, e.g. Z2 or S3")
    p.add_argument("--index", type=int, help="monogenic index")
    p.add_argument("--period", type=int, help="monogenic period")
    p.add_argument("--trusted", action="store_true",
                   help="skip the associativity check on table files")


def _add_run_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--guard-subsets", type=int, default=None,
                   help="override the subset enumeration guard")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sgranks", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("build", help="construct a family and write its table")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--group")
    p.add_argument("--index", type=int)
    p.add_argument("--period", type=int)
    p.add_argument("--out", help="output path; omit to print the table")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("rank", help="compute ranks")
    _add_input_options(p)
    _add_run_options(p)
    for r in ("r1", "r2", "r3", "r4", "r5"):
        p.add_argument(f"--{r}", action="store_true")
    p.add_argument("--all", action="store_true")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check r5 against the definition-based scan")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("prime", help="smallest proper prime subset")
    _add_input_options(p)
    _add_run_options(p)
    p.set_defaults(func=cmd_prime)

    p = sub.add_parser("verify", help="reproduction suites")
    p.add_argument("suite", choices=("brandt", "on", "chain", "duality"))
    p.add_argument("--groups", help="comma list of group names for brandt")
    p.add_argument("--n", help="n or range, e.g. 3 or 2..4 (range for brandt/on)")
    p.add_argument("--table", help="table file (duality input)")
    p.add_argument("--family", choices=FAMILIES, help="family (duality input)")
    p.add_argument("--m", type=int)
    p.add_argument("--group")
    p.add_argument("--index", type=int)
    p.add_argument("--period", type=int)
    p.add_argument("--trusted", action="store_true")
    _add_run_options(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="definition-based large rank")
    _add_input_options(p)
    _add_run_options(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("info", help="basic structure facts")
    _add_input_options(p)
    p.set_defaults(func=cmd_info)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TableParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GuardError as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except NoProperPrimeSubsetError as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except OverflowError as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
