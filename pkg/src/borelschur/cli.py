"""
Command-line front end.  Exit codes: 0 success, 1 a machine check failed,
2 bad input.  With --json-errors failures are reported as one JSON object on
stderr.  The env var BSK_SCALE_CAP overrides the desk-scale guard, either as
a dimension bound ("50000") or as max-degree,max-dimension ("12,50000").
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import basicalg, classifier, posetrep, quiverkit, schur
from .schur import CheckFailed, ScaleCap
from .symcomb import PairOrbit, canonical_pair, diagonal_orbit, fmt_multiindex


def scale_cap_from_env() -> ScaleCap:
    raw = os.environ.get("BSK_SCALE_CAP")
    if not raw:
        return schur.DEFAULT_CAP
    parts = raw.split(",")
    if len(parts) == 1:
        return ScaleCap(max_r=schur.DEFAULT_CAP.max_r, max_dim=int(parts[0]))
    return ScaleCap(max_r=int(parts[0]), max_dim=int(parts[1]))


def parse_multiindex(text: str, n: int) -> tuple[int, ...]:
    if "," in text:
        entries = tuple(int(x) for x in text.split(","))
    else:
        entries = tuple(int(c) for c in text)
    if any(not 1 <= e <= n for e in entries):
        raise ValueError(f"multi-index {text} has entries outside 1..{n}")
    return entries


def parse_composition(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


def fmt_combo(combo: dict) -> str:
    if not combo:
        return "0"
    bits = []
    for label in sorted(combo):
        c = combo[label]
        bits.append(f"{label}" if c == 1 else f"{c}{label}")
    return " + ".join(bits)


def fmt_weight(w) -> str:
    return fmt_multiindex(w) if isinstance(w, tuple) else str(w)


# ---------------------------------------------------------------------------
# subcommands


def cmd_basis(args, cap):
    basis = (
        schur.full_basis(args.n, args.r) if args.full_schur else schur.borel_basis(args.n, args.r)
    )
    cap.check(args.r, len(basis))
    for label in basis:
        print(label)
    print(f"dim = {len(basis)}")
    return 0


def cmd_mult(args, cap):
    x = canonical_pair(parse_multiindex(args.i, args.n), parse_multiindex(args.j, args.n), args.n)
    y = canonical_pair(parse_multiindex(args.k, args.n), parse_multiindex(args.l, args.n), args.n)
    print(fmt_combo(schur.multiply(x, y, args.char)))
    return 0


def cmd_table(args, cap):
    algebra = schur.build_algebra(args.n, args.r, args.char, cap=cap)
    idem = set(algebra.idempotents)
    for (h, l) in sorted(algebra.table):
        if h in idem or l in idem:
            continue
        combo = algebra.product_indices(h, l)
        if combo:
            print(
                f"{algebra.basis[h]} * {algebra.basis[l]} = "
                + fmt_combo({algebra.basis[k]: c for k, c in combo.items()})
            )
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(algebra.to_json(), fh, indent=1, sort_keys=True)
        print(f"wrote {args.json}")
    return 0


def cmd_quiver(args, cap):
    algebra = schur.build_algebra(args.n, args.r, args.char, cap=cap)
    quiver = basicalg.ext_quiver(algebra)
    print(f"vertices: {' '.join(fmt_weight(v) for v in quiver.vertices)}")
    for a in quiver.arrows:
        kind = f" [{a.kind}]" if a.kind else ""
        print(f"{fmt_weight(a.src)} -> {fmt_weight(a.dst)}  {a.label}{kind}")
    relations = ()
    if args.n == 2:
        presentation = quiverkit.borel2_presentation(args.r, args.char)
        relations = presentation.relations
        print("relations:")
        if not relations:
            print("  (none)")
        for rel in relations:
            print(f"  {quiverkit.format_relation(presentation.quiver, rel)}")
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(quiver.to_dot())
        print(f"wrote {args.dot}")
    return 0


def cmd_truncate(args, cap):
    algebra = schur.build_algebra(args.n, args.r, args.char, cap=cap)
    labels = [diagonal_orbit(parse_composition(text)) for text in args.idempotents]
    corner = schur.truncate(algebra, labels)
    print(f"corner dimension = {corner.dim}")
    filt = basicalg.radical_layers(corner)
    for k in range(1, filt.nilpotency_index):
        print(f"rad^{k} basis: {' '.join(str(x) for x in sorted(filt.layer_labels(k)))}")
    quiver = basicalg.ext_quiver(corner, filt)
    for a in quiver.arrows:
        print(f"{fmt_weight(a.src)} -> {fmt_weight(a.dst)}  {a.label}")
    return 0


def cmd_separated(args, cap):
    algebra = schur.build_algebra(args.n, args.r, args.char, cap=cap)
    quiver = basicalg.ext_quiver(algebra)
    sep = quiverkit.separated(quiver)
    for verts, edges in sep.connected_components():
        ade = quiverkit.classify_ade(verts, edges)
        print(f"component {{{', '.join(fmt_weight(v) for v in verts)}}}: {ade}")
    return 0


def cmd_degenerate(args, cap):
    if args.preset != "s32":
        raise ValueError(f"unknown preset {args.preset!r} (available: s32)")
    algebra = schur.build_algebra(3, 2, args.char, cap=cap)
    grading = basicalg.preset_s32()
    degenerated = basicalg.degenerate(algebra, grading)
    print("grading admissible: yes")
    degenerated.check_associativity()
    print("degenerate product associative: yes")
    idem = set(degenerated.idempotents)
    for h in range(degenerated.dim):
        for l in range(degenerated.dim):
            if h in idem or l in idem or not degenerated.compatible(h, l):
                continue
            before = algebra.product_indices(h, l)
            after = degenerated.product_indices(h, l)
            if before != after:
                print(
                    f"{degenerated.basis[h]} * {degenerated.basis[l]} = "
                    + fmt_combo({degenerated.basis[k]: c for k, c in after.items()})
                    + "   (was "
                    + fmt_combo({degenerated.basis[k]: c for k, c in before.items()})
                    + ")"
                )
    flag, witness = basicalg.is_special_biserial(degenerated)
    print(f"special biserial: {'yes' if flag else f'no, witness {witness}'}")
    if not flag:
        raise CheckFailed("degenerate algebra is not special biserial", witness)
    return 0


def cmd_poset(args, cap):
    if args.bundled:
        if args.bundled != "gamma_M":
            raise ValueError(f"unknown bundled poset {args.bundled!r}")
        poset = posetrep.gamma_M()
    elif args.file:
        with open(args.file) as fh:
            poset = posetrep.from_json(json.load(fh))
    else:
        raise ValueError("give --file or --bundled")
    width, antichain = poset.width()
    print(f"elements: {len(poset)}")
    print(f"width: {width}  maximum antichain: {sorted(antichain, key=str)}")
    wild, witness = posetrep.nazarova_wild(poset)
    if wild:
        name, embedding = witness
        print(f"wild: yes  pattern {name} via {embedding}")
    else:
        print("wild: no (contains no Nazarova poset)")
    return 0


def cmd_classify(args, cap):
    if args.evidence:
        verdict = classifier.evidence(args.n, args.r, args.p, cap=cap)
        print(verdict.report())
    else:
        print(classifier.classify(args.n, args.r, args.p))
    return 0


def cmd_grid(args, cap):
    chars = [int(x) for x in args.chars.split(",")]
    grid = classifier.classification_grid(args.n_max, args.r_max, chars)
    letter = {0: "f", 1: "t", 2: "w"}
    for p in chars:
        print(f"characteristic {p}  (rows n=1..{args.n_max}, columns r=0..{args.r_max})")
        for n in range(1, args.n_max + 1):
            print("  " + "".join(letter[grid[(n, r, p)]] for r in range(args.r_max + 1)))
    if not classifier.check_monotonicity(args.n_max, args.r_max, chars):
        raise CheckFailed("classification grid violates monotonicity")
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bsk", description="Borel-Schur algebra toolkit"
    )
    parser.add_argument("--json-errors", action="store_true",
                        help="report failures as JSON on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        return p

    p = add("basis", cmd_basis, help="print the xi-basis and the dimension")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("-p", "--char", type=int, default=0)
    p.add_argument("--full-schur", action="store_true")

    p = add("mult", cmd_mult, help="multiply two basis elements")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("-p", "--char", type=int, default=0)
    p.add_argument("i")
    p.add_argument("j")
    p.add_argument("k")
    p.add_argument("l")

    p = add("table", cmd_table, help="full multiplication table")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("-p", "--char", type=int, default=0)
    p.add_argument("--json", metavar="OUT")

    p = add("quiver", cmd_quiver, help="Ext-quiver (with relations for n = 2)")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("-p", "--char", type=int, default=0)
    p.add_argument("--dot", metavar="OUT")

    p = add("truncate", cmd_truncate, help="idempotent corner with radical layers")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("-p", "--char", type=int, default=0)
    p.add_argument("--idempotents", nargs="+", required=True,
                   metavar="LAMBDA", help="compositions, e.g. 0,1,0,1 0,1,1,0 1,1,0,0")

    p = add("separated", cmd_separated, help="separated quiver with ADE report")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("-p", "--char", type=int, default=0)

    p = add("degenerate", cmd_degenerate, help="graded degeneration pipeline")
    p.add_argument("--preset", required=True)
    p.add_argument("-p", "--char", type=int, default=0)

    p = add("poset", cmd_poset, help="poset analysis")
    p.add_argument("action", choices=["nazarova"])
    p.add_argument("--file")
    p.add_argument("--bundled")

    p = add("classify", cmd_classify, help="finite/tame/wild verdict")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("p", type=int)
    p.add_argument("--evidence", action="store_true")

    p = add("grid", cmd_grid, help="classification region table")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--r-max", type=int, default=12)
    p.add_argument("--chars", default="0,2,3,5")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cap = scale_cap_from_env()
    try:
        return args.fn(args, cap)
    except CheckFailed as exc:
        _report_error(args, "check-failed", exc)
        return 1
    except (ValueError, KeyError, OSError) as exc:
        _report_error(args, "bad-input", exc)
        return 2


def _report_error(args, kind, exc):
    if getattr(args, "json_errors", False):
        payload = {"error": kind, "message": str(exc)}
        if isinstance(exc, CheckFailed) and exc.payload is not None:
            payload["payload"] = str(exc.payload)
        print(json.dumps(payload), file=sys.stderr)
    else:
        print(f"error ({kind}): {exc}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
