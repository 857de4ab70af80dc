"""Command line interface.

Every verb reads a quiver file (and for seq verbs a sequence file),
computes a report, and prints it as text (default) or JSON. JSON reports
embed the quiver and the arguments, so `isoschur check report.json`
can recompute the report and compare. Exit codes: 0 success, 1 invalid
input, 2 search budget exhausted, 3 a built-in cross-check failed.
"""

import argparse
import sys
from pathlib import Path

from .analysis import analyze
from .braid import (
    brute_isotropic_filter,
    enumerate_isotropic,
    format_braid_word,
    iso_type_sequence,
    is_tame_type,
    probe_orbits,
    reduce_to_tame_type,
)
from .errors import BudgetExhausted, InputError, InternalCheckError, IsoschurError
from .fileio import (
    dump_report,
    fraction_str,
    format_vector,
    load_quiver,
    load_report,
    load_sequence,
    parse_vector,
    quiver_from_dict,
    quiver_to_dict,
    write_slice_table,
)
from .homext import (
    canonical_decomposition,
    embeds,
    generic_hom_ext,
    is_schur_root,
    sample_hom_dim,
)
from .quiver import affine_type, classify_self_pairing
from .sequences import mutate, reduce_to_simples, subcategory_quiver, validate_sequence
from .stability import (
    cone_report,
    slice_coordinates,
    stability_status,
    stable_vectors,
)


def _vec(v):
    return [int(x) for x in v]


def _vecs(vs):
    return [_vec(v) for v in vs]


def _base(verb, quiver, args):
    return {"schema": 1, "verb": verb, "quiver": quiver_to_dict(quiver), "args": args}


# report builders: pure functions of (quiver, args) so that the check
# verb can replay them from a stored report


def build_euler(quiver, args):
    report = _base("euler", quiver, args)
    report["matrix"] = [list(r) for r in quiver.euler_matrix()]
    if args.get("pair") is not None:
        a, b = args["pair"]
        report["pair"] = quiver.pair(quiver.check_vector(a), quiver.check_vector(b))
    return report


def build_coxeter(quiver, args):
    report = _base("coxeter", quiver, args)
    mat = quiver.coxeter_inverse() if args.get("inverse") else quiver.coxeter_matrix()
    report["matrix"] = [list(r) for r in mat]
    if args.get("apply") is not None:
        k = args.get("power", 1)
        if args.get("inverse"):
            k = -k
        x = quiver.check_vector(args["apply"])
        report["result"] = _vec(quiver.coxeter_apply(x, k))
    return report


def build_classify(quiver, args):
    report = _base("classify", quiver, args)
    report["vertices"] = quiver.n
    report["arrows"] = len(quiver.arrows)
    report["connected"] = quiver.is_connected()
    aff = affine_type(quiver)
    report["affine"] = {
        "is_affine": aff.is_affine,
        "tag": aff.tag,
        "family": aff.family,
        "null_root": _vec(aff.null_root) if aff.null_root else None,
        "positive_semidefinite": aff.positive_semidefinite,
    }
    if args.get("vector") is not None:
        d = tuple(args["vector"])
        kind, q = classify_self_pairing(quiver, d)
        report["vector"] = _vec(d)
        report["tits"] = q
        report["class"] = kind
        report["schur"] = bool(is_schur_root(quiver, d)) if min(d) >= 0 else False
    return report


def build_homext(quiver, args):
    report = _base("homext", quiver, args)
    a, b = tuple(args["a"]), tuple(args["b"])
    hom, ext = generic_hom_ext(quiver, a, b)
    report["hom"] = hom
    report["ext"] = ext
    report["pair"] = quiver.pair(a, b)
    if args.get("oracle"):
        sampled = sample_hom_dim(
            quiver, a, b, trials=args.get("trials", 3), seed=args.get("seed", 0)
        )
        if sampled < hom:
            raise InternalCheckError(
                f"sampled hom {sampled} below generic hom {hom} for {a}, {b}"
            )
        report["oracle_hom"] = sampled
        report["oracle_agrees"] = sampled == hom
    return report


def build_candecomp(quiver, args):
    report = _base("candecomp", quiver, args)
    entries = canonical_decomposition(quiver, tuple(args["vector"]))
    report["summands"] = [
        {"root": _vec(root), "multiplicity": mult, "kind": kind}
        for root, mult, kind in entries
    ]
    return report


def build_embeds(quiver, args):
    report = _base("embeds", quiver, args)
    report["embeds"] = bool(embeds(quiver, tuple(args["a"]), tuple(args["b"])))
    return report


def build_stable(quiver, args):
    report = _base("stable", quiver, args)
    delta = tuple(args["delta"])
    if args.get("status") is not None:
        report["status"] = stability_status(quiver, tuple(args["status"]), delta)
    else:
        report["stable"] = _vecs(stable_vectors(quiver, delta, args["bound"]))
    return report


def build_cone(quiver, args):
    report = _base("cone", quiver, args)
    cone = cone_report(quiver, tuple(args["delta"]), args["bound"])
    pts = slice_coordinates(cone)
    report["weight"] = _vec(cone.weight)
    report["rays"] = _vecs(cone.rays)
    report["deltabar"] = _vec(cone.deltabar) if cone.deltabar else None
    report["stable_non_extremal"] = (
        _vec(cone.stable_non_extremal) if cone.stable_non_extremal else None
    )
    report["proper"] = _vec(cone.proper) if cone.proper else None
    report["simplex_decomposition"] = (
        [
            {"rays": [i + 1 for i in idx], "dim": dim}
            for idx, dim in cone.simplex_decomposition
        ]
        if cone.simplex_decomposition is not None
        else None
    )
    report["stables"] = _vecs(cone.stables)
    report["complete"] = cone.complete
    report["slice"] = [
        [label, [fraction_str(c) for c in coords]] for label, coords in pts
    ]
    return report


def build_analyze(quiver, args):
    report = _base("analyze", quiver, args)
    res = analyze(
        quiver,
        tuple(args["delta"]),
        bound=args.get("bound", 12),
        horizon=args.get("horizon", 64),
    )
    report["delta"] = _vec(res.delta)
    report["delta_bar"] = _vec(res.delta_bar)
    report["tame_pair"] = _vecs(res.tame_pair)
    report["members"] = [
        {
            "index": lv.index,
            "m": _vec(lv.m),
            "kind": lv.kind,
            "in_tame": lv.in_tame,
            "position": lv.position.tag if lv.position is not None else None,
            "delta_in": _vec(lv.delta_in),
            "delta_out": _vec(lv.delta_out),
        }
        for lv in res.chain.levels
    ]
    report["tame_levels"] = [int(k) for k in res.tame_levels]
    report["r_generators"] = _vecs(res.r_generators)
    report["r_simples"] = _vecs(res.r_simples)
    report["r_quiver"] = quiver_to_dict(res.r_quiver)
    report["r_affine"] = res.r_affine.tag
    report["si_class"] = res.si_class
    report["relation"] = res.relation
    report["stable_simples"] = [[_vec(v), tag] for v, tag in res.stable_simples]
    report["quasi_simples"] = _vecs(res.quasi_simples)
    report["smaller_type"] = res.smaller_type
    report["adjoined_variables"] = res.adjoined_variables
    report["bound_used"] = res.bound_used
    report["complete"] = res.complete
    return report


def build_seq(quiver, args):
    report = _base("seq", quiver, args)
    classes = [tuple(c) for c in args["classes"]]
    op = args["op"]
    if op == "check":
        seq = validate_sequence(quiver, classes)
        report["valid"] = True
        report["length"] = len(seq)
        report["full"] = seq.is_full
        report["classes"] = _vecs(seq.classes)
    elif op == "mutate":
        seq = validate_sequence(quiver, classes)
        at = args["at"]
        if not 1 <= at <= len(seq) - 1:
            raise InputError(f"mutation index {at} out of range 1..{len(seq) - 1}")
        # the input was validated in full; mutation preserves
        # exceptionality, so the result needs no second Schur check
        moved = mutate(seq, at, args["dir"], check=False)
        report["classes"] = _vecs(moved.classes)
    elif op == "simples":
        seq = validate_sequence(quiver, classes)
        report["simples"] = _vecs(reduce_to_simples(seq).classes)
    elif op == "quiver":
        seq = validate_sequence(quiver, classes)
        report["subquiver"] = quiver_to_dict(subcategory_quiver(seq))
    elif op == "reduce":
        iso = iso_type_sequence(quiver, classes, position=args.get("position"))
        expect = args.get("isotropic")
        if expect is not None and tuple(expect) != iso.root_type:
            raise InputError(
                f"declared isotropic root {tuple(expect)} does not match "
                f"the sequence's root type {iso.root_type}"
            )
        word, tame = reduce_to_tame_type(iso, budget=args.get("budget", 10000))
        split = is_tame_type(tame)
        if split is None:
            raise InternalCheckError("reduction endpoint is not of tame type")
        report["word"] = format_braid_word(word)
        report["classes"] = _vecs(tame.base.classes)
        report["position"] = tame.position
        report["root"] = _vec(tame.root_type)
        report["split"] = split
    else:
        raise InputError(f"unknown seq operation {op!r}")
    return report


def build_isotropic(quiver, args):
    report = _base("isotropic", quiver, args)
    roots = enumerate_isotropic(quiver, args["bound"])
    report["roots"] = _vecs(roots)
    report["count"] = len(roots)
    if args.get("verify"):
        brute = brute_isotropic_filter(quiver, args["bound"])
        if list(roots) != list(brute):
            raise InternalCheckError(
                f"enumeration disagrees with direct filter: {roots} vs {brute}"
            )
        report["verified"] = True
    if args.get("probe_orbits"):
        report["probe"] = [
            {
                "root": _vec(row["root"]),
                "tame_root": _vec(row["tame_root"]) if row["tame_root"] else None,
                "word": row["word"],
            }
            for row in probe_orbits(quiver, args["bound"])
        ]
    return report


BUILDERS = {
    "euler": build_euler,
    "coxeter": build_coxeter,
    "classify": build_classify,
    "homext": build_homext,
    "candecomp": build_candecomp,
    "embeds": build_embeds,
    "stable": build_stable,
    "cone": build_cone,
    "analyze": build_analyze,
    "seq": build_seq,
    "isotropic": build_isotropic,
}


# text renderers


def _fmt(value):
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)) and value and isinstance(value[0], int):
        return format_vector(value)
    return str(value)


def _matrix_lines(mat):
    width = max(len(str(x)) for row in mat for x in row)
    return [" ".join(f"{x:>{width}}" for x in row) for row in mat]


def render_text(report):
    verb = report["verb"]
    lines = []
    if verb == "euler":
        if "pair" in report:
            lines.append(str(report["pair"]))
        else:
            lines.extend(_matrix_lines(report["matrix"]))
    elif verb == "coxeter":
        if "result" in report:
            lines.append(format_vector(report["result"]))
        else:
            lines.extend(_matrix_lines(report["matrix"]))
    elif verb == "classify":
        lines.append(f"vertices: {report['vertices']}")
        lines.append(f"arrows: {report['arrows']}")
        lines.append(f"connected: {_fmt(report['connected'])}")
        aff = report["affine"]
        lines.append(f"affine: {_fmt(aff['is_affine'])}")
        if aff["is_affine"]:
            lines.append(f"type: {aff['tag']}")
            lines.append(f"null_root: {format_vector(aff['null_root'])}")
        if "vector" in report:
            lines.append(f"vector: {format_vector(report['vector'])}")
            lines.append(f"tits: {report['tits']}")
            lines.append(f"class: {report['class']}")
            lines.append(f"schur: {_fmt(report['schur'])}")
    elif verb == "homext":
        lines.append(f"hom: {report['hom']}")
        lines.append(f"ext: {report['ext']}")
        lines.append(f"pair: {report['pair']}")
        if "oracle_hom" in report:
            lines.append(f"oracle_hom: {report['oracle_hom']}")
            lines.append(f"oracle_agrees: {_fmt(report['oracle_agrees'])}")
    elif verb == "candecomp":
        for entry in report["summands"]:
            lines.append(
                f"{entry['multiplicity']} x {format_vector(entry['root'])}"
                f" {entry['kind']}"
            )
    elif verb == "embeds":
        lines.append(f"embeds: {'yes' if report['embeds'] else 'no'}")
    elif verb == "stable":
        if "status" in report:
            lines.append(f"status: {report['status']}")
        else:
            for v in report["stable"]:
                lines.append(format_vector(v))
    elif verb == "cone":
        lines.append(f"delta: {format_vector(report['args']['delta'])}")
        lines.append(f"weight: {format_vector(report['weight'])}")
        lines.append("rays:")
        for v in report["rays"]:
            lines.append(f"  {format_vector(v)}")
        lines.append(f"deltabar: {_fmt(report['deltabar'])}")
        lines.append(f"stable_non_extremal: {_fmt(report['stable_non_extremal'])}")
        lines.append(f"proper: {_fmt(report['proper'])}")
        dec = report["simplex_decomposition"]
        if dec is None:
            lines.append("simplex_decomposition: none")
        else:
            groups = "; ".join(
                "rays " + ",".join(str(i) for i in g["rays"]) + f" dim {g['dim']}"
                for g in dec
            )
            lines.append(f"simplex_decomposition: {groups or 'trivial'}")
        lines.append(f"complete: {_fmt(report['complete'])}")
        lines.append("slice:")
        for label, coords in report["slice"]:
            lines.append(f"  {label} " + " ".join(coords))
    elif verb == "analyze":
        lines.append(f"delta: {format_vector(report['delta'])}")
        lines.append(f"delta_bar: {format_vector(report['delta_bar'])}")
        pair = report["tame_pair"]
        lines.append(
            f"tame_pair: {format_vector(pair[0])} ; {format_vector(pair[1])}"
        )
        lines.append("members:")
        for lv in report["members"]:
            lines.append(
                f"  {lv['index']}: m={format_vector(lv['m'])} kind={lv['kind']}"
                f" in_tame={_fmt(lv['in_tame'])}"
                f" position={_fmt(lv['position'])}"
                f" delta={format_vector(lv['delta_out'])}"
            )
        lines.append(
            "tame_levels: "
            + (",".join(str(k) for k in report["tame_levels"]) or "none")
        )
        lines.append(
            "r_generators: "
            + " ; ".join(format_vector(v) for v in report["r_generators"])
        )
        lines.append(
            "r_simples: " + " ; ".join(format_vector(v) for v in report["r_simples"])
        )
        lines.append(f"r_affine: {report['r_affine']}")
        lines.append(f"si_class: {report['si_class']}")
        if report["relation"] is not None:
            lines.append(f"relation: {report['relation']}")
        lines.append("stable_simples:")
        for v, tag in report["stable_simples"]:
            lines.append(f"  {format_vector(v)} {tag}")
        lines.append(
            "quasi_simples: "
            + (
                " ; ".join(format_vector(v) for v in report["quasi_simples"])
                or "none"
            )
        )
        lines.append(f"smaller_type: {_fmt(report['smaller_type'])}")
        lines.append(f"adjoined_variables: {report['adjoined_variables']}")
        lines.append(f"bound_used: {report['bound_used']}")
        lines.append(f"complete: {_fmt(report['complete'])}")
    elif verb == "seq":
        op = report["args"]["op"]
        if op == "check":
            lines.append(f"valid: {_fmt(report['valid'])}")
            lines.append(f"length: {report['length']}")
            lines.append(f"full: {_fmt(report['full'])}")
        elif op == "mutate":
            for v in report["classes"]:
                lines.append(format_vector(v))
        elif op == "simples":
            for v in report["simples"]:
                lines.append(format_vector(v))
        elif op == "quiver":
            sub = report["subquiver"]
            lines.append("vertices: " + " ".join(sub["vertices"]))
            for t, h in sub["arrows"]:
                lines.append(f"{t} -> {h}")
        elif op == "reduce":
            lines.append(f"word: {report['word'] or '(empty)'}")
            lines.append(f"root: {format_vector(report['root'])}")
            lines.append(f"position: {report['position']}")
            lines.append(f"split: {report['split']}")
            lines.append("classes:")
            for v in report["classes"]:
                lines.append(f"  {format_vector(v)}")
    elif verb == "isotropic":
        lines.append(f"count: {report['count']}")
        for v in report["roots"]:
            lines.append(format_vector(v))
        if report.get("verified"):
            lines.append("verified: true")
        if "probe" in report:
            lines.append("probe:")
            for row in report["probe"]:
                target = (
                    format_vector(row["tame_root"])
                    if row["tame_root"]
                    else "(budget exhausted)"
                )
                word = row["word"] or "(empty)"
                lines.append(
                    f"  {format_vector(row['root'])} -> {target} via {word}"
                )
    else:
        raise InputError(f"no text renderer for verb {verb!r}")
    return "\n".join(lines) + "\n"


def render_dot(report):
    verb = report["verb"]
    if verb == "classify":
        doc = report["quiver"]
    elif verb == "seq" and report["args"]["op"] == "quiver":
        doc = report["subquiver"]
    else:
        raise InputError(f"dot output is not available for verb {report['verb']!r}")
    return quiver_from_dict(doc).to_dot()


# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _add_output(sub):
    sub.add_argument(
        "--output", choices=("text", "json", "dot"), default="text",
        help="report format",
    )


def make_parser():
    parser = _Parser(prog="isoschur", description=__doc__.splitlines()[0])
    top = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    p = top.add_parser("euler", help="Euler matrix or a single pairing")
    p.add_argument("quiver")
    p.add_argument("--pair", nargs=2, metavar=("A", "B"))
    _add_output(p)

    p = top.add_parser("coxeter", help="Coxeter matrix, optionally applied")
    p.add_argument("quiver")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--apply", metavar="VEC")
    p.add_argument("--power", type=int, default=1)
    _add_output(p)

    p = top.add_parser("classify", help="connectivity, affine type, root class")
    p.add_argument("quiver")
    p.add_argument("--vector", metavar="VEC")
    _add_output(p)

    p = top.add_parser("homext", help="generic hom and ext of a pair")
    p.add_argument("quiver")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check hom against random matrices")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=3)
    _add_output(p)

    p = top.add_parser("candecomp", help="canonical decomposition")
    p.add_argument("quiver")
    p.add_argument("vector")
    _add_output(p)

    p = top.add_parser("embeds", help="does a embed generically in b")
    p.add_argument("quiver")
    p.add_argument("a")
    p.add_argument("b")
    _add_output(p)

    p = top.add_parser("stable", help="stable vectors for the weight of delta")
    p.add_argument("quiver")
    p.add_argument("--delta", required=True)
    p.add_argument("--bound", type=int, default=10)
    p.add_argument("--status", metavar="VEC",
                   help="report the status of this vector instead")
    _add_output(p)

    p = top.add_parser("cone", help="extremal rays and slice of the stable cone")
    p.add_argument("quiver")
    p.add_argument("--delta", required=True)
    p.add_argument("--bound", type=int, default=10)
    p.add_argument("--slice-out", metavar="FILE",
                   help="write the slice table here plus a PNG next to it")
    _add_output(p)

    p = top.add_parser("analyze", help="full report for an isotropic Schur root")
    p.add_argument("quiver")
    p.add_argument("--delta", required=True)
    p.add_argument("--bound", type=int, default=12)
    p.add_argument("--horizon", type=int, default=64)
    _add_output(p)

    p = top.add_parser("seq", help="operations on an exceptional sequence file")
    p.add_argument("file")
    ops = p.add_subparsers(dest="op", required=True, metavar="op")
    q = ops.add_parser("check", help="validate the sequence")
    _add_output(q)
    q = ops.add_parser("mutate", help="mutate one adjacent pair")
    q.add_argument("--at", type=int, required=True)
    q.add_argument("--dir", choices=("left", "right"), required=True)
    _add_output(q)
    q = ops.add_parser("simples", help="simples of the spanned subcategory")
    _add_output(q)
    q = ops.add_parser("quiver", help="quiver of the spanned subcategory")
    _add_output(q)
    q = ops.add_parser("reduce", help="reduce an isotropic-type sequence")
    q.add_argument("--budget", type=int, default=10000)
    _add_output(q)

    p = top.add_parser("isotropic", help="all isotropic Schur roots in a box")
    p.add_argument("quiver")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--verify", action="store_true",
                   help="compare against the direct box filter")
    p.add_argument("--probe-orbits", action="store_true",
                   help="reduce a standard sequence for every root")
    _add_output(p)

    p = top.add_parser("check", help="recompute a JSON report and compare")
    p.add_argument("report")

    return parser


def _collect_args(ns):
    """Translate parsed flags into the JSON-able args dict of the verb."""
    verb = ns.verb
    if verb == "euler":
        pair = None
        if ns.pair is not None:
            pair = [_vec(parse_vector(ns.pair[0])), _vec(parse_vector(ns.pair[1]))]
        return {"pair": pair}
    if verb == "coxeter":
        return {
            "inverse": ns.inverse,
            "apply": _vec(parse_vector(ns.apply)) if ns.apply else None,
            "power": ns.power,
        }
    if verb == "classify":
        return {"vector": _vec(parse_vector(ns.vector)) if ns.vector else None}
    if verb == "homext":
        return {
            "a": _vec(parse_vector(ns.a)),
            "b": _vec(parse_vector(ns.b)),
            "oracle": ns.oracle,
            "seed": ns.seed,
            "trials": ns.trials,
        }
    if verb == "candecomp":
        return {"vector": _vec(parse_vector(ns.vector))}
    if verb == "embeds":
        return {"a": _vec(parse_vector(ns.a)), "b": _vec(parse_vector(ns.b))}
    if verb == "stable":
        return {
            "delta": _vec(parse_vector(ns.delta)),
            "bound": ns.bound,
            "status": _vec(parse_vector(ns.status)) if ns.status else None,
        }
    if verb == "cone":
        return {"delta": _vec(parse_vector(ns.delta)), "bound": ns.bound}
    if verb == "analyze":
        return {
            "delta": _vec(parse_vector(ns.delta)),
            "bound": ns.bound,
            "horizon": ns.horizon,
        }
    if verb == "isotropic":
        return {
            "bound": ns.bound,
            "verify": ns.verify,
            "probe_orbits": ns.probe_orbits,
        }
    raise InputError(f"unknown verb {verb!r}")


def run(argv):
    ns = make_parser().parse_args(argv)

    if ns.verb == "check":
        stored = load_report(ns.report)
        verb = stored.get("verb")
        if verb not in BUILDERS:
            raise InputError(f"{ns.report}: unknown verb {verb!r}")
        quiver = quiver_from_dict(stored["quiver"], origin=ns.report)
        fresh = BUILDERS[verb](quiver, stored["args"])
        import json as _json

        fresh = _json.loads(dump_report(fresh))
        if fresh != stored:
            bad = sorted(
                k for k in set(fresh) | set(stored) if fresh.get(k) != stored.get(k)
            )
            raise InputError(
                f"{ns.report}: recomputation differs in fields {', '.join(bad)}"
            )
        print(f"check ok: {verb}")
        return 0

    if ns.verb == "seq":
        doc = load_sequence(ns.file)
        quiver = doc["quiver"]
        args = {"op": ns.op, "classes": _vecs(doc["classes"])}
        if ns.op == "mutate":
            args["at"] = ns.at
            args["dir"] = ns.dir
        elif ns.op == "reduce":
            args["budget"] = ns.budget
            args["position"] = doc["position"]
            args["isotropic"] = _vec(doc["isotropic"]) if doc["isotropic"] else None
        report = build_seq(quiver, args)
    else:
        quiver = load_quiver(ns.quiver)
        report = BUILDERS[ns.verb](quiver, _collect_args(ns))

    if ns.verb == "cone" and ns.slice_out:
        points = [(label, coords) for label, coords in report["slice"]]
        write_slice_table(ns.slice_out, points)
        from fractions import Fraction

        from .plotting import render_slice_png

        png = Path(ns.slice_out).with_suffix(".png")
        render_slice_png(
            [(lbl, [float(Fraction(c)) for c in cs]) for lbl, cs in points],
            png,
            title=f"stable cone slice, delta {format_vector(report['args']['delta'])}",
        )

    fmt = getattr(ns, "output", "text")
    if fmt == "json":
        sys.stdout.write(dump_report(report))
    elif fmt == "dot":
        sys.stdout.write(render_dot(report))
    else:
        sys.stdout.write(render_text(report))
    return 0


def main(argv=None):
    try:
        return run(sys.argv[1:] if argv is None else argv)
    except InputError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except BudgetExhausted as err:
        print(f"budget exhausted: {err}", file=sys.stderr)
        return 2
    except IsoschurError as err:
        print(f"internal check failed: {err}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
