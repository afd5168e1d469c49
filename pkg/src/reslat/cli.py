"""reslat command line: verify, report, quotient, product, decompose, enumerate, check-laws.

Exit status is 0 on success, 1 when a check or analysis fails and 2 for
usage and parse errors. ``PATH`` is an algebra file or ``fixture:NAME``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .algebra import Algebra, verify_axioms
from .boolean_center import boolean_center, has_lifting
from .enumeration import DEFAULT_ORDER_CAP, HARD_ORDER_CAP, OrderCapError, enumerate_algebras
from .filters import NotAFilterError, all_filters, dense_filter, max_filters, radical, spec
from .fixtures import FIXTURES, fixture
from .laws import check_laws
from .products import (InconsistencyError, NoLiftingError, SizeCapError, classify, decompose,
                       direct_product)
from .quotients import quotient


class UsageError(Exception):
    pass


class CheckFailed(Exception):
    pass


def load_algebra(path: str) -> Algebra:
    if path.startswith("fixture:"):
        name = path.split(":", 1)[1]
        if name not in FIXTURES:
            raise UsageError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}")
        return fixture(name)
    return io.load(path)


def _verified(path: str) -> Algebra:
    A = load_algebra(path)
    report = verify_axioms(A)
    if not report.ok:
        raise CheckFailed(f"{path}: not a residuated lattice: "
                          f"{report.violations[0].describe(A)} (run 'reslat verify' for all)")
    return A


def split_labels(text: str) -> list[str]:
    """Split on commas outside parentheses, so product labels like (a,1) survive."""
    text = text.strip()
    if text.startswith("{") and text.endswith("}"):
        text = text[1:-1]
    out, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur).strip())
    return [x for x in out if x]


def _fmt(labels) -> str:
    return "{" + ",".join(labels) + "}"


def _emit(args, rows: list[tuple[str, object]], payload: dict):
    if args.json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        for key, value in rows:
            print(f"{key}\t{value}")


# -- verbs ------------------------------------------------------------------

def cmd_verify(args) -> int:
    A = load_algebra(args.path)
    report = verify_axioms(A)
    payload = {"name": A.name, "ok": report.ok,
               "violations": [{"law": v.law, "witness": [A.labels[i] for i in v.witness]}
                              for v in report.violations]}
    rows = [("algebra", A.name), ("elements", A.n), ("status", "pass" if report.ok else "fail")]
    for law, vs in report.by_law().items():
        rows.append(("violation", f"{vs[0].describe(A)}\t({len(vs)} total)"))
    _emit(args, rows, payload)
    return 0 if report.ok else 1


def structure_report(A: Algebra) -> dict:
    lifting = has_lifting(A)
    Q = lifting.rad_quotient.quotient
    cl = classify(A)
    return {
        "name": A.name,
        "elements": list(A.labels),
        "filters": [F.labels for F in all_filters(A)],
        "spec": [F.labels for F in spec(A)],
        "max": [F.labels for F in max_filters(A)],
        "rad": radical(A).labels,
        "ds": dense_filter(A).labels,
        "boolean_center": boolean_center(A).labels,
        "rad_quotient": list(Q.labels),
        "boolean_center_rad_quotient": boolean_center(Q).labels,
        "lifting": lifting.has_lifting,
        "lifting_witnesses": lifting.witness_labels(),
        "classification": cl.as_dict(),
        "notes": list(cl.notes),
    }


def _report_rows(r: dict) -> list[tuple[str, object]]:
    rows = [("algebra", r["name"]), ("elements", " ".join(r["elements"])),
            ("filters", " ".join(_fmt(F) for F in r["filters"])),
            ("spec", " ".join(_fmt(F) for F in r["spec"])),
            ("max", " ".join(_fmt(F) for F in r["max"])),
            ("rad", _fmt(r["rad"])), ("ds", _fmt(r["ds"])),
            ("boolean_center", _fmt(r["boolean_center"])),
            ("rad_quotient", " ".join(r["rad_quotient"])),
            ("boolean_center_rad_quotient", _fmt(r["boolean_center_rad_quotient"])),
            ("lifting", "yes" if r["lifting"] else f"no (witness {r['lifting_witnesses'][0]})")]
    for key, value in r["classification"].items():
        rows.append((key, str(value).lower() if isinstance(value, bool) else value))
    rows += [("note", n) for n in r["notes"]]
    return rows


def cmd_report(args) -> int:
    A = _verified(args.path)
    r = structure_report(A)
    rows = _report_rows(r)
    if args.out:
        from .plotting import render_report_figures

        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.json").write_text(json.dumps(r, indent=2, ensure_ascii=False) + "\n",
                                         encoding="utf-8")
        (out / "report.tsv").write_text("".join(f"{k}\t{v}\n" for k, v in rows), encoding="utf-8")
        figures = render_report_figures(A, out)
        rows.append(("written", " ".join(str(p) for p in
                                         [out / "report.json", out / "report.tsv", *figures])))
    _emit(args, rows, r)
    return 0


def _write_or_print(A: Algebra, out, metadata=None):
    text = io.dumps(A, metadata)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_quotient(args) -> int:
    A = _verified(args.path)
    if args.filter is None:
        raise UsageError("quotient needs --filter LABELS")
    try:
        F = A.indices(split_labels(args.filter))
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    Q = quotient(A, F)
    meta = {"parent": A.name, "filter": A.label_set(F),
            "class_map": {A.labels[a]: Q.class_label(a) for a in A.elements}}
    _write_or_print(Q.quotient, args.out, meta)
    return 0


def cmd_product(args) -> int:
    algebras = [_verified(p) for p in args.paths]
    P = direct_product(algebras)
    _write_or_print(P.algebra, args.out)
    return 0


def cmd_decompose(args) -> int:
    A = _verified(args.path)
    D = decompose(A)
    L = A.labels
    payload = {
        "name": A.name,
        "idempotents": [L[e] for e in D.idempotents],
        "factors": [{"idempotent": L[r.e], "elements": list(r.algebra.labels),
                     "local": f["local"]} for r, f in zip(D.factors, D.factor_flags)],
        # from coordinates, so commas inside factor labels are harmless
        "iso": {L[a]: [r.algebra.labels[c] for r, c in zip(D.factors, D.product.coords[D.iso(a)])]
                for a in A.elements},
    }
    rows = [("algebra", A.name), ("idempotents", _fmt(payload["idempotents"])),
            ("factors", len(D.factors))]
    for k, f in enumerate(payload["factors"], 1):
        rows.append((f"factor_{k}", f"<{f['idempotent']}> = {_fmt(f['elements'])}\tlocal={str(f['local']).lower()}"))
    for a, parts in payload["iso"].items():
        rows.append(("iso", f"{a}\t" + "\t".join(parts)))
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for k, r in enumerate(D.factors, 1):
            fac = r.algebra.renamed(f"{A.name}<{L[r.e]}>")
            io.dump(fac, out / f"factor_{k}.json", {"idempotent": L[r.e]})
        (out / "decomposition.json").write_text(
            json.dumps(payload, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    _emit(args, rows, payload)
    return 0


def cmd_enumerate(args) -> int:
    if args.order is None:
        raise UsageError("enumerate needs --order N")
    try:
        cat = enumerate_algebras(args.order, cap=args.cap)
    except OrderCapError as exc:
        raise UsageError(str(exc)) from None
    index = {"order": cat.order, "counts": cat.counts, "entries": []}
    for A in cat.entries:
        index["entries"].append({"name": A.name, "file": f"{A.name}.json",
                                 "flags": classify(A).as_dict()})
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for A in cat.entries:
            io.dump(A, out / f"{A.name}.json")
        (out / "index.json").write_text(json.dumps(index, indent=2) + "\n", encoding="utf-8")
    rows = [("order", cat.order)] + [(f"count_{k}", v) for k, v in cat.counts.items()]
    for e in index["entries"]:
        on = [k for k, v in e["flags"].items() if v is True and k not in ("semilocal", "maximal")]
        rows.append(("entry", f"{e['name']}\tmax={e['flags']['n_max']}\t{','.join(on) or '-'}"))
    _emit(args, rows, index)
    return 0


def cmd_check_laws(args) -> int:
    A = _verified(args.path)
    results = check_laws(A)
    payload = {"name": A.name, "ok": all(r.ok for r in results),
               "laws": [{"law": r.law, "statement": r.statement, "checked": r.checked,
                         "failures": r.failures,
                         "witness": None if r.witness is None else [A.labels[i] for i in r.witness]}
                        for r in results]}
    rows = [("algebra", A.name)]
    for r in results:
        status = "pass" if r.ok else "FAIL at " + ",".join(A.labels[i] for i in r.witness)
        rows.append((r.law, f"{r.checked - r.failures}/{r.checked}\t{status}"))
    _emit(args, rows, payload)
    return 0 if payload["ok"] else 1


# -- entry point --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="reslat", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True, metavar="VERB")

    def verb(name, func, help, path=True):
        sp = sub.add_parser(name, help=help)
        if path:
            sp.add_argument("path", metavar="PATH")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    verb("verify", cmd_verify, "check the residuated lattice axioms")
    verb("report", cmd_report, "filters, Spec, Max, Rad, Ds, B, lifting, classification").add_argument(
        "--out", metavar="DIR", help="also write report.json, report.tsv and figures here")
    q = verb("quotient", cmd_quotient, "quotient by a filter")
    q.add_argument("--filter", metavar="LABELS", help="comma-separated filter elements")
    q.add_argument("--out", metavar="FILE")
    pr = verb("product", cmd_product, "direct product of algebra files", path=False)
    pr.add_argument("paths", nargs="+", metavar="PATH")
    pr.add_argument("--out", metavar="FILE")
    verb("decompose", cmd_decompose, "split into local factors").add_argument(
        "--out", metavar="DIR", help="write factor files and decomposition.json here")
    en = verb("enumerate", cmd_enumerate, "all residuated lattices of one order", path=False)
    en.add_argument("--order", type=int, metavar="N")
    en.add_argument("--cap", type=int, default=DEFAULT_ORDER_CAP,
                    help=f"largest order allowed (default {DEFAULT_ORDER_CAP}, at most {HARD_ORDER_CAP})")
    en.add_argument("--out", metavar="DIR", help="write the catalog and index.json here")
    verb("check-laws", cmd_check_laws, "exhaustive identity suites with pass counts")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, io.ParseError, OrderCapError) as exc:
        print(f"reslat {args.verb}: error: {exc}", file=sys.stderr)
        return 2
    except NoLiftingError as exc:
        print(f"reslat decompose: refused: {exc}", file=sys.stderr)
        return 1
    except (CheckFailed, NotAFilterError, SizeCapError, InconsistencyError) as exc:
        print(f"reslat {args.verb}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
