"""Command-line interface: exact character computation, box detection,
catalogue decomposition, enumeration, and the verification suites.

Output contract.  Every invocation writes exactly one JSON object to
stdout with keys in fixed order and every integer rendered as a decimal
string, so repeated runs are byte-identical.  --pretty adds a human
summary on stderr.  Exit codes: 0 success, 2 parse/usage error, 3 domain
rejection (unfaithful or non-rectangular input, with a diagnostic
report), 4 verification mismatch, 5 internal invariant violation.

Input grammar (case-insensitive, whitespace-insensitive):

    algebra := factor ("*" factor)*        factor := LETTER RANK
    rep     := term ("+" term)*            term   := irrep ("*" irrep)*
    irrep   := "triv" | "std" | "spin" | "spin+" | "spin-"
             | "sym" INT | "wedge" INT | "dual" "(" irrep ")"
             | "hw" "(" INT ("," INT)* ")"

A term names one irreducible per simple factor, in order.  "spin" on a
D factor expands the term into both half-spin summands.  Aliases
resolve against the canonical family, so C2 accepts "spin" via B2,
while D3 (entered as A3) rejects it with a hint.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .liealg import SemisimpleAlgebra, SimpleType, Weight
from .charcalc import (AliasError, RepSpec, character_of, dual_weight,
                       is_faithful, resolve_alias)
from .rectkit import (automorphism_order, detect_rectangular, from_character,
                      is_hypercubic, lengths, with_ambient_padding)
from . import classify
from .classify import (CatalogueItem, CatalogueMismatchError, NotFaithfulError,
                       NotRectangularError, catalogue_lengths, catalogue_spec,
                       decompose, enumerate_rectangular, iter_catalogue_items,
                       long_roots_3space_census, roots_in_plane_census,
                       verify_classification, verify_howe)

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_MISMATCH = 4
EXIT_INTERNAL = 5


class ParseError(ValueError):
    def __init__(self, message: str, pos: int | None = None):
        super().__init__(message)
        self.pos = pos


# ---------------------------------------------------------------- lexing

def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            name = text[i:j].lower()
            if name == "spin" and j < n and text[j] in "+-":
                name += text[j]
                j += 1
            tokens.append(("name", name, i))
            i = j
        elif c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
        elif c in "*+(),":
            tokens.append((c, c, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(("end", None, n))
    return tokens


class _TokenStream:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok


# --------------------------------------------------------------- parsing

def parse_algebra(text: str) -> SemisimpleAlgebra:
    ts = _TokenStream(text)
    factors = []
    while True:
        tok = ts.expect("name")
        name = tok[1]
        if len(name) != 1 or not name.isalpha():
            raise ParseError(f"expected a family letter, found {name!r}", tok[2])
        rank_tok = ts.expect("int")
        try:
            factors.append(SimpleType(name.upper(), rank_tok[1]))
        except ValueError as e:
            raise ParseError(str(e), tok[2]) from None
        tok = ts.next()
        if tok[0] == "end":
            break
        if tok[0] != "*":
            raise ParseError(f"expected '*' between factors, found {tok[1]!r}",
                             tok[2])
    return SemisimpleAlgebra(tuple(factors))


def _local_dual(t: SimpleType, coords):
    alg = SemisimpleAlgebra((t,))
    return dual_weight(Weight(alg, coords)).coords


def _parse_irrep(ts: _TokenStream, t: SimpleType):
    """Options for one irreducible of the factor t (spin on D gives two)."""
    tok = ts.expect("name")
    name, pos = tok[1], tok[2]
    if name == "hw":
        ts.expect("(")
        coords = [ts.expect("int")[1]]
        while ts.peek()[0] == ",":
            ts.next()
            coords.append(ts.expect("int")[1])
        ts.expect(")")
        if len(coords) != t.rank:
            raise ParseError(
                f"hw(...) needs {t.rank} coordinates for {t.label}, "
                f"got {len(coords)}", pos)
        return [tuple(coords)]
    if name == "dual":
        ts.expect("(")
        inner = _parse_irrep(ts, t)
        ts.expect(")")
        return [_local_dual(t, c) for c in inner]
    arg = None
    if name in ("sym", "wedge"):
        arg = ts.expect("int")[1]
    try:
        return list(resolve_alias(t, name, arg))
    except AliasError as e:
        raise ParseError(str(e), pos) from None


def parse_rep(text: str, algebra: SemisimpleAlgebra) -> RepSpec:
    ts = _TokenStream(text)
    summands = []
    while True:
        options = [()]
        for j, t in enumerate(algebra.factors):
            if j > 0:
                tok = ts.next()
                if tok[0] != "*":
                    raise ParseError(
                        f"term names {j} of {len(algebra.factors)} factors of "
                        f"{algebra.label}; expected '*', found {tok[1]!r}", tok[2])
            blocks = _parse_irrep(ts, t)
            options = [o + b for o in options for b in blocks]
        summands.extend(options)
        tok = ts.next()
        if tok[0] == "end":
            break
        if tok[0] != "+":
            raise ParseError(f"expected '+' between summands, found {tok[1]!r}",
                             tok[2])
    return RepSpec.make(algebra, [(c, 1) for c in summands])


# ------------------------------------------------------------- rendering

def render_irrep(t: SimpleType, coords) -> str:
    m = t.rank
    if not any(coords):
        return "triv"
    hot = [i for i, x in enumerate(coords) if x]
    if len(hot) == 1:
        i, k = hot[0], coords[hot[0]]
        if t.family == "A":
            if i == 0:
                return "std" if k == 1 else f"sym{k}"
            if i == m - 1:
                return "dual(std)" if k == 1 else f"dual(sym{k})"
            if k == 1:
                return f"wedge{i + 1}"
        elif t.family in "BCD" and i == 0 and k == 1:
            return "std"
        if k == 1:
            if t.family == "B" and i == m - 1:
                return "spin"
            if t.family == "D" and i == m - 1:
                return "spin+"
            if t.family == "D" and i == m - 2:
                return "spin-"
    return "hw(" + ",".join(str(x) for x in coords) + ")"


def render_algebra(algebra: SemisimpleAlgebra) -> str:
    return algebra.label


def render_spec(spec: RepSpec) -> str:
    ranges = spec.algebra.block_ranges()
    terms = []
    for hw, mult in spec.summands:
        parts = [render_irrep(t, hw.coords[r.start:r.stop])
                 for t, r in zip(spec.algebra.factors, ranges)]
        terms.extend(["*".join(parts)] * mult)
    return " + ".join(terms)


# ------------------------------------------------------------- JSON form

def _jsonable(obj):
    """Recursive conversion; every integer becomes a decimal string."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, str) or obj is None:
        return obj
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, (set, frozenset)):
        return [_jsonable(x) for x in sorted(obj)]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, SimpleType):
        return obj.label
    if isinstance(obj, SemisimpleAlgebra):
        return obj.label
    if isinstance(obj, CatalogueItem):
        return {"kind": obj.kind, "params": [str(p) for p in obj.params]}
    if isinstance(obj, Weight):
        return [str(x) for x in obj.coords]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _emit(payload: dict, pretty_lines=None, pretty: bool = False) -> None:
    sys.stdout.write(json.dumps(_jsonable(payload), separators=(",", ":"))
                     + "\n")
    if pretty and pretty_lines:
        sys.stderr.write("\n".join(pretty_lines) + "\n")


def _envelope(command: str, ok: bool, result=None, error=None) -> dict:
    payload = {"schema_version": SCHEMA_VERSION, "command": command, "ok": ok}
    if error is not None:
        payload["error"] = error
    payload["result"] = result
    return payload


# -------------------------------------------------------------- commands

def _load_spec(args) -> tuple[SemisimpleAlgebra, RepSpec]:
    algebra = parse_algebra(args.algebra)
    spec = parse_rep(args.rep, algebra)
    return algebra, spec


def _cmd_char(args) -> int:
    algebra, spec = _load_spec(args)
    char = character_of(spec)
    weights = [{"coords": list(w), "mult": m}
               for w, m in sorted(char.entries.items())]
    result = {
        "algebra": algebra.label,
        "rep": render_spec(spec),
        "dimension": spec.dimension,
        "mass": char.mass,
        "multiplicity_free": all(m == 1 for m in char.entries.values()),
        "weights": weights,
    }
    lines = [f"character of {result['rep']} over {algebra.label}",
             f"dimension {spec.dimension}"]
    lines += [f"  {w}  x{m}" for w, m in sorted(char.entries.items())]
    _emit(_envelope("char", True, result), lines, args.pretty)
    return EXIT_OK


def _cmd_rect(args) -> int:
    algebra, spec = _load_spec(args)
    s = from_character(character_of(spec))
    cert = detect_rectangular(s)
    if cert is None:
        reason = classify._rect_reason(s)
        result = {"algebra": algebra.label, "rep": render_spec(spec),
                  "rectangular": False, "reason": reason}
        _emit(_envelope("rect", False, result,
                        {"code": "not_rectangular",
                         "message": f"not rectangular: {reason}"}),
              [f"not rectangular: {reason}"], args.pretty)
        return EXIT_DOMAIN
    padded = with_ambient_padding(cert, algebra.rank)
    ls = lengths(padded)
    side = is_hypercubic(padded)
    auto = automorphism_order(ls) if ls and min(ls) >= 2 else None
    result = {
        "algebra": algebra.label,
        "rep": render_spec(spec),
        "rectangular": True,
        "vertex": list(cert.vertex),
        "edges": [list(e) for e in cert.edges],
        "degrees": list(cert.degrees),
        "padding": padded.padding,
        "lengths": list(ls),
        "hypercubic": side is not None,
        "side": side,
        "automorphism_order": auto,
    }
    lines = [f"rectangular with lengths {list(ls)}"
             + (f", hypercubic of side {side}" if side is not None else "")]
    _emit(_envelope("rect", True, result), lines, args.pretty)
    return EXIT_OK


def _cmd_decompose(args) -> int:
    algebra, spec = _load_spec(args)
    try:
        dec = decompose(spec)
    except NotFaithfulError as e:
        result = {"algebra": algebra.label, "rep": render_spec(spec),
                  "faithful": False}
        _emit(_envelope("decompose", False, result,
                        {"code": "not_faithful", "message": str(e)}),
              [str(e)], args.pretty)
        return EXIT_DOMAIN
    except NotRectangularError as e:
        result = {"algebra": algebra.label, "rep": render_spec(spec),
                  "faithful": True, "rectangular": False, "reason": e.reason}
        _emit(_envelope("decompose", False, result,
                        {"code": "not_rectangular", "message": str(e)}),
              [str(e)], args.pretty)
        return EXIT_DOMAIN
    parts = []
    all_lengths = []
    for positions, item in dec.parts:
        part_alg, part_spec = catalogue_spec(item)
        ls = catalogue_lengths(item)
        all_lengths.extend(ls)
        parts.append({
            "factors": [p + 1 for p in positions],
            "item": item,
            "label": item.label,
            "algebra": part_alg.label,
            "rep": render_spec(part_spec),
            "lengths": list(ls),
        })
    total = tuple(sorted(all_lengths))
    side = total[0] if total and len(set(total)) == 1 else None
    result = {
        "algebra": algebra.label,
        "rep": render_spec(spec),
        "faithful": True,
        "rectangular": True,
        "parts": parts,
        "lengths": list(total),
        "hypercubic": side is not None,
        "side": side,
    }
    lines = [f"decomposes into {len(parts)} catalogue part(s):"]
    lines += [f"  factors {p['factors']}: {p['label']} = {p['rep']} "
              f"over {p['algebra']}" for p in parts]
    _emit(_envelope("decompose", True, result), lines, args.pretty)
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    algebras = [args.algebra] if args.algebra else None
    if args.dry_run:
        pool = ([parse_algebra(args.algebra)] if args.algebra
                else classify._algebras_up_to(args.max_rank))
        result = {"max_rank": args.max_rank, "max_dim": args.max_dim,
                  "dry_run": True, "algebra_count": len(pool),
                  "algebras": [a.label for a in pool]}
        _emit(_envelope("enumerate", True, result),
              [f"would scan {len(pool)} algebras"], args.pretty)
        return EXIT_OK
    found = enumerate_rectangular(args.max_rank, args.max_dim,
                                  algebras=algebras)
    specs = []
    for algebra, spec in found:
        cert = detect_rectangular(from_character(character_of(spec)))
        ls = lengths(with_ambient_padding(cert, algebra.rank))
        specs.append({"algebra": algebra.label, "rep": render_spec(spec),
                      "dimension": spec.dimension, "lengths": list(ls)})
    result = {"max_rank": args.max_rank, "max_dim": args.max_dim,
              "count": len(specs), "specs": specs}
    lines = [f"{len(specs)} rectangular specs"]
    lines += [f"  {s['algebra']}: {s['rep']}  dim {s['dimension']} "
              f"lengths {s['lengths']}" for s in specs]
    _emit(_envelope("enumerate", True, result), lines, args.pretty)
    return EXIT_OK


def _cmd_verify_catalogue(args) -> int:
    if args.dry_run:
        items = list(iter_catalogue_items(args.max_rank, args.max_dim))
        result = {"max_rank": args.max_rank, "max_dim": args.max_dim,
                  "dry_run": True, "catalogue_items": len(items)}
        _emit(_envelope("verify-catalogue", True, result),
              [f"{len(items)} catalogue items in range"], args.pretty)
        return EXIT_OK
    report = verify_classification(args.max_rank, args.max_dim,
                                   seed=args.seed)
    ok = report["ok"]
    lines = [f"enumerated {report['enumerated']}, catalogue "
             f"{report['catalogue']}, ok={ok}"]
    if ok:
        _emit(_envelope("verify-catalogue", True, report), lines, args.pretty)
        return EXIT_OK
    _emit(_envelope("verify-catalogue", False, report,
                    {"code": "verification_mismatch",
                     "message": "enumeration disagrees with the catalogue"}),
          lines, args.pretty)
    return EXIT_MISMATCH


def _cmd_verify_howe(args) -> int:
    algebra = parse_algebra(args.algebra)
    if len(algebra.factors) != 1:
        raise ParseError("verify-howe takes a single simple factor")
    t = algebra.factors[0]
    if args.dry_run:
        count = len(classify._dominant_weights_up_to_dim(t, args.max_dim))
        result = {"type": t.label, "max_dim": args.max_dim,
                  "dry_run": True, "dominant_weights": count}
        _emit(_envelope("verify-howe", True, result),
              [f"would scan {count} dominant weights of {t.label}"],
              args.pretty)
        return EXIT_OK
    report = verify_howe(t, args.max_dim)
    lines = [f"{t.label}: scanned {report['scanned']}, flagged "
             f"{len(report['flagged'])}, ok={report['ok']}"]
    if report["ok"]:
        _emit(_envelope("verify-howe", True, report), lines, args.pretty)
        return EXIT_OK
    _emit(_envelope("verify-howe", False, report,
                    {"code": "verification_mismatch",
                     "message": "multiplicity-free scan disagrees with the "
                                "classified list"}),
          lines, args.pretty)
    return EXIT_MISMATCH


def _cmd_census(args) -> int:
    top = min(args.max_rank, 4)
    if args.dry_run:
        result = {"max_rank": top, "dry_run": True,
                  "plane_ranks": list(range(2, top + 1)),
                  "space_ranks": [n for n in (3, 4) if n <= top]}
        _emit(_envelope("census", True, result), ["dry run"], args.pretty)
        return EXIT_OK
    planes = [roots_in_plane_census(n) for n in range(2, top + 1)]
    spaces = [long_roots_3space_census(n) for n in (3, 4) if n <= top]
    ok = all(r["ok"] for r in planes + spaces)
    result = {"max_rank": top, "planes": planes, "long_3spaces": spaces,
              "ok": ok}
    lines = [f"B{r['n']} planes: {r['rich_planes']} rich, "
             f"{len(r['violations'])} violations" for r in planes]
    lines += [f"B{r['n']} long 3-spaces: {r['rich_spaces']} rich, "
              f"{len(r['violations'])} violations" for r in spaces]
    if ok:
        _emit(_envelope("census", True, result), lines, args.pretty)
        return EXIT_OK
    _emit(_envelope("census", False, result,
                    {"code": "verification_mismatch",
                     "message": "census found violations"}),
          lines, args.pretty)
    return EXIT_MISMATCH


# ---------------------------------------------------------------- driver

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _emit(_envelope(self.prog.split()[-1] if self.prog else "usage",
                        False, None,
                        {"code": "usage", "message": message}))
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rectrep", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    def common(p, rep=False, bounds=False, seed=False):
        p.add_argument("--json", action="store_true", default=True,
                       help="emit JSON on stdout (always on)")
        p.add_argument("--pretty", action="store_true",
                       help="also print a human summary on stderr")
        if rep:
            p.add_argument("--algebra", required=True,
                           help="e.g. A1*B3")
            p.add_argument("--rep", required=True,
                           help="e.g. 'sym2*spin' or 'std + dual(std)'")
        if bounds:
            p.add_argument("--max-rank", type=int, default=2)
            p.add_argument("--max-dim", type=int, default=64)
            p.add_argument("--dry-run", action="store_true",
                           help="report planned work without running")
        if seed:
            p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("char", help="weights with multiplicities")
    common(p, rep=True)
    p.set_defaults(func=_cmd_char)

    p = sub.add_parser("rect", help="decide rectangularity, certificate")
    common(p, rep=True)
    p.set_defaults(func=_cmd_rect)

    p = sub.add_parser("decompose",
                       help="factor into catalogue items (faithful input)")
    common(p, rep=True)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("enumerate",
                       help="all faithful rectangular specs within bounds")
    common(p, bounds=True)
    p.add_argument("--algebra", help="restrict to one algebra, e.g. A3")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify-catalogue",
                       help="brute-force enumeration against the catalogue")
    common(p, bounds=True, seed=True)
    p.set_defaults(func=_cmd_verify_catalogue)

    p = sub.add_parser("verify-howe",
                       help="multiplicity-free scan for one simple type")
    common(p)
    p.add_argument("--algebra", required=True, help="single factor, e.g. B3")
    p.add_argument("--max-dim", type=int, default=128)
    p.add_argument("--dry-run", action="store_true")
    p.set_defaults(func=_cmd_verify_howe)

    p = sub.add_parser("census", help="root-geometry censuses for B_n")
    common(p)
    p.add_argument("--max-rank", type=int, default=4)
    p.add_argument("--dry-run", action="store_true")
    p.set_defaults(func=_cmd_census)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    command = args.command
    try:
        return args.func(args)
    except ParseError as e:
        detail = {"code": "parse", "message": str(e)}
        if e.pos is not None:
            detail["column"] = e.pos
        _emit(_envelope(command, False, None, detail), [str(e)], args.pretty)
        return EXIT_USAGE
    except CatalogueMismatchError as e:
        _emit(_envelope(command, False, None,
                        {"code": "internal", "message": str(e)}),
              [str(e)], args.pretty)
        return EXIT_INTERNAL
    except (ValueError, AssertionError) as e:
        _emit(_envelope(command, False, None,
                        {"code": "usage", "message": str(e)}),
              [str(e)], args.pretty)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
