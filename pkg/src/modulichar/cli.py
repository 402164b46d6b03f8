"""Command-line surface: component rendering, result cache, and verification.

Subcommands:

    interior m n       render ch_t of the open (m, n) component
    compactified m n   render ch_t of the compactified component + Poincare
    census m n         stratum census of the compactification as JSON
    verify             run the oracle-equivalence and property suites

Components are rendered in the Schur or power-sum basis as text, JSON, or
a LaTeX table row.  Computed components are cached as JSON files keyed by
a content hash of (kind, m, n, bound, code version); cache writes are
atomic (write to a temporary file, then rename).
"""

import argparse
import hashlib
import json
import os
import sys
import tempfile
import time
from fractions import Fraction

from . import __version__
from .interior import InteriorTable
from .legendre import compactified_characteristic, weight_substitution
from .partitions import sort_key
from .ring import SymSeries, TPoly, Truncation, poincare_from, to_schur_basis
from .trees import census_report, equivariant_treesum, poincare_oracle

CACHE_ENV = "MODULICHAR_CACHE"


# ---- serialization -------------------------------------------------------


def _tpoly_to_json(tp):
    return [[e, str(c)] for e, c in sorted(tp.items())]


def _tpoly_from_json(pairs):
    return TPoly({int(e): Fraction(c) for e, c in pairs})


def series_to_json(series, basis="schur"):
    """The shared JSON schema for a (possibly bivariate) symmetric series."""
    if basis == "schur":
        terms = to_schur_basis(series)
    elif basis == "powersum":
        terms = series.terms
    else:
        raise ValueError(f"unknown basis {basis!r}")
    tr = series.trunc
    rows = [
        {"lambda1": list(l1), "lambda2": list(l2), "t": _tpoly_to_json(tp)}
        for (l1, l2), tp in sorted(
            terms.items(), key=lambda kv: (sort_key(kv[0][0]), sort_key(kv[0][1]))
        )
    ]
    return {
        "basis": basis,
        "truncation": {
            "n1": tr.n1,
            "n2": tr.n2,
            "tlo": tr.tlo,
            "thi": tr.thi,
            "ntot": tr.ntot,
        },
        "terms": rows,
    }


def series_from_json(obj):
    """Rebuild a power-sum-basis series from the JSON schema."""
    if obj["basis"] != "powersum":
        raise ValueError("only power-sum payloads are rebuilt from JSON")
    tr = obj["truncation"]
    trunc = Truncation(tr["n1"], tr["n2"], tr["tlo"], tr["thi"], ntot=tr["ntot"])
    terms = {}
    for row in obj["terms"]:
        key = (tuple(row["lambda1"]), tuple(row["lambda2"]))
        terms[key] = _tpoly_from_json(row["t"])
    return SymSeries(trunc, terms)


# ---- rendering -----------------------------------------------------------


def format_tpoly(tp):
    """A univariate polynomial in t as plain text, e.g. '1 + 4t^2 + t^4'."""
    if not tp:
        return "0"
    parts = []
    for e, c in sorted(tp.items()):
        mag = abs(c)
        body = "" if (mag == 1 and e != 0) else str(mag)
        if e == 1:
            body += "t"
        elif e != 0:
            body += f"t^{e}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def _sym_label(lam, factor, basis):
    letter = "s" if basis == "schur" else "p"
    body = ",".join(str(x) for x in lam) if lam else "0"
    return f"{letter}[{body}]({factor})"


def _sorted_rows(payload):
    return [
        ((tuple(r["lambda1"]), tuple(r["lambda2"])), r["t"]) for r in payload["terms"]
    ]


def render_text(payload):
    lines = []
    for (l1, l2), pairs in _sorted_rows(payload):
        tp = TPoly({int(e): Fraction(c) for e, c in pairs})
        label = _sym_label(l1, 1, payload["basis"])
        if l2:
            label += " " + _sym_label(l2, 2, payload["basis"])
        lines.append(f"{label}: {format_tpoly(tp)}")
    return "\n".join(lines) if lines else "0"


def _latex_sym(lam, factor):
    body = ",".join(str(x) for x in lam)
    return "s^{(%d)}_{%s}" % (factor, body)


def render_latex(payload):
    """One table-row expression, Schur terms grouped by ascending t-exponent."""
    if payload["basis"] != "schur":
        raise ValueError("the LaTeX emitter renders the Schur basis")
    by_exp = {}
    for (l1, l2), pairs in _sorted_rows(payload):
        for e, c in pairs:
            by_exp.setdefault(int(e), []).append((l1, l2, Fraction(c)))
    chunks = []
    for e in sorted(by_exp):
        terms = sorted(by_exp[e], key=lambda t: (sort_key(t[0]), sort_key(t[1])))
        inner = []
        for l1, l2, c in terms:
            mono = _latex_sym(l1, 1) + (_latex_sym(l2, 2) if l2 else "")
            mag = "" if abs(c) == 1 else str(abs(c))
            piece = mag + mono
            if not inner:
                inner.append(piece if c > 0 else "-" + piece)
            else:
                inner.append(("+ " if c > 0 else "- ") + piece)
        body = " ".join(inner)
        if e == 0:
            chunks.append(body)
        else:
            tfac = "t" if e == 1 else f"t^{{{e}}}"
            if len(terms) > 1:
                chunks.append(rf"{tfac}\left( {body} \right)")
            else:
                chunks.append(tfac + " " + body)
    return " + ".join(chunks) if chunks else "0"


def render(payload, fmt):
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=True)
    if fmt == "text":
        return render_text(payload)
    if fmt == "latex":
        return render_latex(payload)
    raise ValueError(f"unknown format {fmt!r}")


# ---- cache ---------------------------------------------------------------


def cache_dir(args):
    if getattr(args, "no_cache", False):
        return None
    path = getattr(args, "cache_dir", None) or os.environ.get(CACHE_ENV)
    return path


def _cache_key(kind, m, n, bound):
    blob = json.dumps(
        {"kind": kind, "m": m, "n": n, "bound": bound, "version": __version__},
        sort_keys=True,
    )
    return hashlib.sha256(blob.encode()).hexdigest()


def cache_get(directory, key):
    if not directory:
        return None
    path = os.path.join(directory, key + ".json")
    if not os.path.exists(path):
        return None
    try:
        with open(path) as fh:
            entry = json.load(fh)
        if entry.get("version") != __version__:
            return None
        return entry["payload"]
    except (json.JSONDecodeError, KeyError, OSError) as exc:
        print(f"warning: ignoring corrupt cache entry {path}: {exc}", file=sys.stderr)
        return None


def cache_put(directory, key, payload):
    if not directory:
        return
    os.makedirs(directory, exist_ok=True)
    entry = {"version": __version__, "timestamp": time.time(), "payload": payload}
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        json.dump(entry, fh, sort_keys=True)
    os.replace(tmp, os.path.join(directory, key + ".json"))


# ---- commands ------------------------------------------------------------


def _check_range(m, n):
    if m < 2:
        raise SystemExit(
            "error: m >= 2 required (the first weight class needs at least "
            "two unit-weight points)"
        )
    if m + n < 3:
        raise SystemExit("error: m+n >= 3 required (no moduli below three points)")


def _component_payload(kind, m, n, bound, directory):
    """The power-sum JSON payload of one component, through the cache."""
    key = _cache_key(kind, m, n, bound)
    cached = cache_get(directory, key)
    if cached is not None:
        return cached
    if kind == "interior":
        comp = InteriorTable(bound).component(m, n)
    else:
        comp = compactified_characteristic(bound).component(m, n)
    payload = series_to_json(comp, basis="powersum")
    cache_put(directory, key, payload)
    return payload


def _emit_component(kind, args):
    _check_range(args.m, args.n)
    bound = max(args.m + args.n, args.max_weight or 0, 3)
    payload = _component_payload(kind, args.m, args.n, bound, cache_dir(args))
    comp = series_from_json(payload)
    if args.tmax is not None:
        comp = comp.map_coeffs(lambda tp: tp.truncate(comp.trunc.tlo, args.tmax))
    out = []
    if not args.poincare_only:
        out.append(render(series_to_json(comp, basis=args.basis), args.format))
    if kind == "compactified" or args.poincare_only:
        poly = poincare_from(comp, args.m, args.n)
        if args.format == "json":
            out.append(json.dumps({"poincare": _tpoly_to_json(poly)}))
        else:
            out.append("Poincare: " + format_tpoly(poly))
    print("\n".join(out))


def cmd_interior(args):
    _emit_component("interior", args)


def cmd_compactified(args):
    _emit_component("compactified", args)


def cmd_census(args):
    _check_range(args.m, args.n)
    print(json.dumps(census_report(args.m, args.n), sort_keys=True))


def _verify_trees(bound, jobs, failures):
    table = compactified_characteristic(bound)
    pairs = [
        (m, n)
        for m in range(2, bound + 1)
        for n in range(0, bound - m + 1)
        if m + n >= 3
    ]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            oracle = dict(zip(pairs, pool.map(_oracle_star, pairs)))
    else:
        oracle = {mn: poincare_oracle(*mn) for mn in pairs}
    for mn in pairs:
        if poincare_from(table.component(*mn), *mn) != oracle[mn]:
            failures.append(f"poincare mismatch at {mn}")
    return len(pairs)


def _oracle_star(mn):
    return poincare_oracle(*mn)


def _verify_equivariant(bound, failures):
    bound = min(bound, 5)
    interior = InteriorTable(bound)
    table = compactified_characteristic(
        bound, interior=interior, cross_check=False, validate=False
    )
    W = {
        (a, b): weight_substitution(interior.component(a, b))
        for a in range(2, bound + 1)
        for b in range(0, bound - a + 1)
        if a + b >= 3
    }
    pairs = [
        (m, n)
        for m in range(2, bound + 1)
        for n in range(0, bound - m + 1)
        if m + n >= 3
    ]
    for mn in pairs:
        if equivariant_treesum(W, *mn, interior.trunc) != table.component(*mn):
            failures.append(f"equivariant treesum mismatch at {mn}")
    return len(pairs)


def cmd_verify(args):
    if args.max_weight < 3:
        raise SystemExit("error: m+n >= 3 required, pass --max-weight >= 3")
    failures = []
    report = {"max_weight": args.max_weight, "oracles": {}}
    oracles = (
        ["trees", "equivariant-trees", "properties"]
        if args.oracle == "all"
        else [args.oracle]
    )
    for oracle in oracles:
        if oracle == "trees":
            checked = _verify_trees(args.max_weight, args.jobs, failures)
        elif oracle == "equivariant-trees":
            checked = _verify_equivariant(args.max_weight, failures)
        else:
            # the pipeline's own property gate: transform cross-check, residual,
            # Schur-positivity, palindromicity
            compactified_characteristic(args.max_weight)
            checked = 1
        report["oracles"][oracle] = checked
    report["failures"] = failures
    report["status"] = "PASS" if not failures else "FAIL"
    print(json.dumps(report, sort_keys=True))
    if failures:
        raise SystemExit(1)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="modulichar",
        description="Equivariant Poincare polynomials of weighted pointed "
        "genus-zero moduli, in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def component_parser(name, fn):
        p = sub.add_parser(name)
        p.add_argument("m", type=int)
        p.add_argument("n", type=int)
        p.add_argument("--basis", choices=["schur", "powersum"], default="schur")
        p.add_argument("--format", choices=["text", "json", "latex"], default="text")
        p.add_argument("--tmax", type=int, default=None)
        p.add_argument("--max-weight", type=int, default=None)
        p.add_argument("--cache-dir", default=None)
        p.add_argument("--no-cache", action="store_true")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--poincare-only", action="store_true")
        p.set_defaults(func=fn)
        return p

    component_parser("interior", cmd_interior)
    component_parser("compactified", cmd_compactified)

    p = sub.add_parser("census")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify")
    p.add_argument("--max-weight", type=int, required=True)
    p.add_argument(
        "--oracle",
        choices=["trees", "equivariant-trees", "properties", "all"],
        default="all",
    )
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    args.func(args)


if __name__ == "__main__":
    main()
