"""Command line entry point: ``horoclassify <command> [options]``.

Exit codes: 0 success, 1 verification mismatch, 2 classification gap,
3 usage error, 4 missing fixture.
"""
from __future__ import annotations

import argparse
import difflib
import json
import random
import sys
from pathlib import Path
from typing import Callable

from . import __version__
from . import horoclass, octonion, twoorbits
from .dynkin import diagram_automorphisms
from .rootsys import simple_types

EXIT_OK, EXIT_MISMATCH, EXIT_GAP, EXIT_USAGE, EXIT_NO_FIXTURE = 0, 1, 2, 3, 4
DEFAULT_MAX_RANK = 12
FIXTURE_DIR = Path(__file__).with_name("fixtures")

# the five non-homogeneous families as (family, alpha, beta) makers
_NON_HOMOGENEOUS = {
    3: lambda t: [(t.rank - 1, t.rank)] if t.family == "B" and t.rank >= 3 else [],
    4: lambda t: [(1, 3)] if (t.family, t.rank) == ("B", 3) else [],
    5: lambda t: [(i + 1, i) for i in range(1, t.rank)] if t.family == "C" else [],
    7: lambda t: [(2, 3)] if t.family == "F" else [],
    8: lambda t: [(2, 1)] if t.family == "G" else [],
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def envelope(command: str, params: dict, records: list, summary: dict) -> dict:
    return {
        "command": command,
        "version": __version__,
        "params": params,
        "records": records,
        "summary": summary,
    }


def cmd_classify(max_rank: int) -> dict:
    """Special pairs with their homogeneity verdicts."""
    if max_rank < 1:
        raise UsageError("--max-rank must be positive")
    special = horoclass.enumerate_special(max_rank) if max_rank >= 2 else []
    verdicts = [horoclass.homogeneity_verdict(p) for p, _ in special]
    records = [v.to_json() for v in verdicts]

    expected, got = set(), set()
    for t in simple_types(max_rank):
        for case, a, b in horoclass.family_instances(t):
            for sigma in diagram_automorphisms(t):
                expected.add((str(t), frozenset((sigma[a], sigma[b]))))
    for p, _ in special:
        got.add((str(p.gamma), frozenset((p.alpha, p.beta))))

    nh_expected = {
        (str(t), case, a, b)
        for t in simple_types(max_rank)
        for case, make in _NON_HOMOGENEOUS.items()
        for a, b in make(t)
    }
    nh_got = {(str(v.pair.gamma), v.case_label, v.pair.alpha, v.pair.beta) for v in verdicts if not v.homogeneous}
    pair_ok = all(
        v.pairing_value == (2 if v.case_label == 8 else 1) for v in verdicts if not v.homogeneous
    )
    summary = {
        "special": len(records),
        "homogeneous": sum(v.homogeneous for v in verdicts),
        "non_homogeneous": sum(not v.homogeneous for v in verdicts),
        "missing": sorted(f"{g} {sorted(s)}" for g, s in expected - got),
        "extra": sorted(f"{g} {sorted(s)}" for g, s in got - expected),
        "non_homogeneous_list_ok": nh_got == nh_expected,
        "pairings_ok": pair_ok,
        "gaps": 0,
        "verified_up_to_rank": max_rank,
    }
    summary["mismatched"] = len(summary["missing"]) + len(summary["extra"]) + (not summary["non_homogeneous_list_ok"]) + (not pair_ok)
    summary["verified"] = len(records) if summary["mismatched"] == 0 else 0
    return envelope("classify", {"max_rank": max_rank}, records, summary)


def cmd_two_orbits(max_rank: int) -> dict:
    """Candidate triples, their verdicts, the fiber table and the four Levi cases."""
    if max_rank < 1:
        raise UsageError("--max-rank must be positive")
    survivors = []
    if max_rank >= 2:
        survivors = twoorbits.enumerate_simple_triples(max_rank) + twoorbits.enumerate_product_triples(max_rank)
    records, mismatched = [], 0
    outcomes: dict[str, set] = {"homogeneous": set(), "nonhomogeneous": set(), "nonsmooth": set()}
    for label, tr, _, via in survivors:
        v = twoorbits.case_verdict(label, tr)
        rec = {"kind": "triple", **v.to_json(), "via_automorphism": via}
        if v.outcome == "homogeneous":
            rec["dim_consistent"] = v.dim_GH == v.target_dim
            mismatched += not rec["dim_consistent"]
        else:
            # a witness must fail the local model, a smooth variety's weight must pass
            mismatched += v.local_model_ok != (v.outcome == "nonhomogeneous")
        outcomes[v.outcome].add(label if v.outcome != "nonhomogeneous" else f"{label}:{v.target}")
        records.append(rec)

    for f in twoorbits.fiber_case_table():
        records.append({
            "kind": "fiber_case", "row": f.row, "G'": f.g_prime, "H'": f.h_prime,
            "X'": f.x_prime, "Q'": f.q_prime,
            "local_weight": {str(k): v for k, v in f.local_weight.items()},
        })
    for row in twoorbits.lemma4cas_table():
        records.append({"kind": "lemma4cas", **row})
        mismatched += not row["dims_agree"]

    labels = {lab for lab, *_ in survivors}
    summary = {
        "triples": len(survivors),
        "labels_seen": sorted(labels, key=twoorbits.LABELS.index),
        "labels_missing": [lab for lab in twoorbits.LABELS if lab not in labels] if max_rank >= 4 else [],
        "nonhomogeneous": sorted(outcomes["nonhomogeneous"]),
        "nonsmooth": sorted(outcomes["nonsmooth"]),
        "homogeneous": sorted(outcomes["homogeneous"], key=twoorbits.LABELS.index),
        "gaps": 0,
        "verified_up_to_rank": max_rank,
    }
    if max_rank >= 4:
        mismatched += summary["nonhomogeneous"] != ["f':X2", "h:X1"]
        mismatched += summary["nonsmooth"] != ["e", "e'", "g", "j"]
        mismatched += bool(summary["labels_missing"])
    summary["mismatched"] = mismatched
    summary["verified"] = len(records) if not mismatched else 0
    return envelope("two-orbits", {"max_rank": max_rank}, records, summary)


def cmd_octonion(samples: int = 100, seed: int = 0) -> dict:
    """z-table verification plus the algebraic checks on the e-table."""
    rng = random.Random(seed)
    one = octonion.e(0)
    basis = [octonion.e(k) for k in range(8)]
    checks = {}
    checks["identity"] = all(octonion.mul(one, x) == x == octonion.mul(x, one) for x in basis)
    checks["composition_basis"] = all(
        octonion.norm_q(octonion.mul(x, y)) == octonion.norm_q(x) * octonion.norm_q(y) for x in basis for y in basis
    )
    comp = alt = True
    for _ in range(samples):
        x, y = octonion.random_octonion(rng), octonion.random_octonion(rng)
        comp &= octonion.norm_q(octonion.mul(x, y)) == octonion.norm_q(x) * octonion.norm_q(y)
        xx = octonion.mul(x, x)
        alt &= octonion.mul(x, octonion.mul(x, y)) == octonion.mul(xx, y)
        alt &= octonion.mul(octonion.mul(y, x), x) == octonion.mul(y, xx)
    checks["composition_random"] = comp
    checks["alternative"] = alt
    checks["wedge_kernel_dim"] = octonion.wedge_kernel_dim()

    printed = octonion.verify_z_table()
    repair = octonion.repair_z_basis()
    repaired = octonion.verify_z_table(repair["best_spec"])
    records = [{"basis": "printed", **r} for r in printed["records"]]
    records += [{"basis": "repaired", **r} for r in repaired["records"]]
    algebra_ok = all(v for k, v in checks.items() if k != "wedge_kernel_dim") and checks["wedge_kernel_dim"] == 14
    summary = {
        "checks": checks,
        "algebra_ok": algebra_ok,
        "printed_basis": printed["basis"],
        "printed_basis_rank": printed["basis_rank"],
        "checked": printed["checked"],
        "matched": printed["matched"],
        "mismatched": printed["mismatched"],
        "repaired_basis": repaired["basis"],
        "repaired_basis_rank": repaired["basis_rank"],
        "repaired_mismatched": repaired["mismatched"],
        "repair_candidates": repair["candidates"],
        "note": "the repaired basis is a computed search result, not printed text",
    }
    return envelope("octonion", {"samples": samples, "seed": seed}, records, summary)


COMMANDS: dict[str, Callable[..., dict]] = {
    "classify": cmd_classify,
    "two-orbits": cmd_two_orbits,
    "octonion": cmd_octonion,
}


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=False, ensure_ascii=True) + "\n"
    cols: list[str] = []
    for r in report["records"]:
        for k in r:
            if k not in cols:
                cols.append(k)
    lines = ["\t".join(cols)]
    for r in report["records"]:
        cells = []
        for c in cols:
            v = r.get(c, "")
            cells.append(v if isinstance(v, str) else json.dumps(v))
        lines.append("\t".join(cells))
    return "\n".join(lines) + "\n"


def _report_for(name: str, max_rank: int) -> dict:
    if name == "octonion":
        return cmd_octonion()
    return COMMANDS[name](max_rank)


def cmd_verify_all(max_rank: int, fixtures: Path, write: bool = False) -> int:
    """Regenerate every report and compare it byte for byte with its fixture."""
    status = EXIT_OK
    for name in COMMANDS:
        text = render(_report_for(name, max_rank), "json")
        path = fixtures / f"{name}.json"
        if write:
            fixtures.mkdir(parents=True, exist_ok=True)
            path.write_text(text)
            print(f"wrote {path}")
            continue
        if not path.exists():
            print(f"missing fixture {path}", file=sys.stderr)
            return EXIT_NO_FIXTURE
        old = path.read_text()
        if old != text:
            diff = difflib.unified_diff(old.splitlines(True), text.splitlines(True), str(path), "current")
            sys.stderr.writelines(diff)
            status = EXIT_MISMATCH
            print(f"{name}: MISMATCH")
        else:
            print(f"{name}: ok")
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="horoclassify", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, helptext in (
        ("classify", "special pairs and homogeneity verdicts"),
        ("two-orbits", "candidate triples and their verdicts"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--max-rank", type=int, default=DEFAULT_MAX_RANK)
        p.add_argument("--format", choices=("json", "tsv"), default="json")
    p = sub.add_parser("octonion", help="octonion tables and identities")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p = sub.add_parser("verify-all", help="compare every report with the golden fixtures")
    p.add_argument("--max-rank", type=int, default=DEFAULT_MAX_RANK)
    p.add_argument("--fixtures", type=Path, default=FIXTURE_DIR)
    p.add_argument("--write", action="store_true", help="regenerate the fixtures instead of comparing")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify-all":
            return cmd_verify_all(args.max_rank, args.fixtures, args.write)
        if args.command == "octonion":
            report = cmd_octonion()
        else:
            report = COMMANDS[args.command](args.max_rank)
    except UsageError as exc:
        print(f"horoclassify: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (horoclass.ClassificationGapError, twoorbits.TripleGapError) as exc:
        print(f"horoclassify: classification gap: {exc}", file=sys.stderr)
        return EXIT_GAP
    sys.stdout.write(render(report, args.format))
    return exit_code(report)


def exit_code(report: dict) -> int:
    s = report["summary"]
    if report["command"] == "octonion":
        # z-table disagreements are findings; only the algebra checks can fail
        return EXIT_OK if s["algebra_ok"] else EXIT_MISMATCH
    return EXIT_OK if s["mismatched"] == 0 else EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
