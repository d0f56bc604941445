"""``eulerhom`` command line.

Exit codes: 0 success, 1 validation failure (non-Euler input), 2 malformed
input or a violated precondition.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable

from eulerhom import burnside as bs
from eulerhom import eulerhomology as eh
from eulerhom import stratifold as st
from eulerhom.permgroups import PermGroup
from eulerhom.simplicial import SimplicialComplex, betti_mod2, euler_characteristic
from eulerhom.z2linalg import int_to_bits

EXIT_OK, EXIT_INVALID, EXIT_MALFORMED = 0, 1, 2


class ValidationFailed(Exception):
    """Carries the report lines of a failed validation (exit code 1)."""

    def __init__(self, payload: dict, lines: list[str]):
        super().__init__("validation failed")
        self.payload = payload
        self.lines = lines


def _load(path: str) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def _complex(path: str) -> SimplicialComplex:
    return SimplicialComplex.from_json(_load(path))


def _diagram(path: str) -> st.StratumDiagram:
    return st.StratumDiagram.from_json(_load(path))


def _group(path: str) -> PermGroup:
    return PermGroup.from_json(_load(path))


def _gdiagram(path: str, group_path: str | None) -> bs.GStratumDiagram:
    obj = _load(path)
    group = _group(group_path) if group_path else None
    if group is None and "group" not in obj:
        raise ValueError("G-diagram has no \"group\" entry; pass --group")
    return bs.GStratumDiagram.from_json(obj, group)


# Each handler returns (json payload, text lines).

def cmd_homology(args) -> tuple[Any, list[str]]:
    x = _complex(args.complex)
    betti = list(betti_mod2(x))
    chi = euler_characteristic(x)
    return {"betti_mod2": betti, "euler_characteristic": chi, "f_vector": list(x.f_vector())}, [
        "betti " + " ".join(map(str, betti)), f"chi {chi}"]


def cmd_eh_dims(args):
    dims = eh.eh_dims(_complex(args.complex), args.max_degree)
    return {"dims": dims}, [" ".join(map(str, dims))]


def cmd_mu(args):
    target = _complex(args.target)
    sw = eh.SWData.from_json(_load(args.sw), target)
    value = eh.mu(sw, args.degree, target)
    terms = [{"degree": j, "t": k, "cycle": int_to_bits(v, target.count(j))} for (j, k), v in value.terms]
    lines = [f"H{t['degree']} t^{t['t']} " + "".join(map(str, t["cycle"])) for t in terms] or ["0"]
    return {"terms": terms}, lines


def _diagram_out(d) -> tuple[Any, list[str]]:
    return d.to_json(), [json.dumps(d.to_json(), sort_keys=True)]


def cmd_st_validate(args):
    report = st.validate_euler(_diagram(args.diagram))
    if not report.ok:
        raise ValidationFailed({"euler": False, "failures": report.describe()}, report.describe())
    return {"euler": True}, ["euler"]


def cmd_st_cone(args):
    return _diagram_out(st.cone(_diagram(args.diagram)))


def cmd_st_product(args):
    return _diagram_out(st.product(_diagram(args.first), _diagram(args.second)))


def cmd_st_union(args):
    a, b = st.pad_to_common([_diagram(args.first), _diagram(args.second)])
    return _diagram_out(st.disjoint_union(a, b))


def cmd_st_glue(args):
    return _diagram_out(st.glue(_diagram(args.first), _diagram(args.second)))


def cmd_st_classify(args):
    value = st.classify_pt(_diagram(args.diagram))
    return {"class": value}, [str(value)]


def cmd_group_order(args):
    h = _group(args.group)
    return {"order": h.order}, [str(h.order)]


def cmd_group_subgroups(args):
    h = _group(args.group)
    rows = [{"label": c.label, "order": c.order, "conjugates": c.conjugates,
             "normalizer_index": c.normalizer_index} for c in h.subgroup_classes]
    lines = [f"{r['label']} conjugates={r['conjugates']} normalizer_index={r['normalizer_index']}" for r in rows]
    return {"classes": rows}, lines


def cmd_group_marks(args):
    h = _group(args.group)
    m = bs.marks_matrix(h)
    labels = [c.label for c in h.subgroup_classes]
    width = max(len(l) for l in labels)
    lines = [" " * width + " " + " ".join(labels)]
    for label, row in zip(labels, m.entries):
        lines.append(label.ljust(width) + " " + " ".join(str(v).rjust(len(l)) for v, l in zip(row, labels)))
    return {"labels": labels, "marks": [list(r) for r in m.entries]}, lines


def cmd_group_vh(args):
    labels = [c.label for c in bs.vh_basis(_group(args.group))]
    return {"basis": labels}, labels


def _burnside_out(a: bs.BurnsideElement):
    labels = [c.label for c in a.group.subgroup_classes]
    coeffs = {l: c for l, c in zip(labels, a.coeffs)}
    lines = [f"{l} {c}" for l, c in coeffs.items() if c] or ["0"]
    return {"coefficients": coeffs, "character": list(bs.ch(a))}, lines


def cmd_eq_chi(args):
    h = _group(args.group)
    obj = _load(args.cells)
    try:
        cells = [bs.CellOrbitData.from_json(h, c) for c in obj["cells"]]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed H-CW data: {exc}") from exc
    return _burnside_out(bs.equivariant_chi(h, cells))


def cmd_eq_classify(args):
    v = bs.classify_equivariant_pt(_gdiagram(args.diagram, args.group))
    labels = [c.label for c in bs.vh_basis(v.group)]
    return {"basis": labels, "bits": list(v.bits)}, [f"{l} {b}" for l, b in zip(labels, v.bits)]


def cmd_eq_classify_naive(args):
    value = bs.classify_naive_equivariant_pt(_gdiagram(args.diagram, args.group))
    return {"class": value}, [str(value)]


def cmd_eq_fixed(args):
    s = _gdiagram(args.diagram, args.group)
    if not 0 <= args.subgroup < len(s.group.subgroup_classes):
        raise ValueError(f"subgroup class {args.subgroup} out of range")
    return _diagram_out(bs.fixed_diagram(s, args.subgroup))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="eulerhom", description="Euler homology computations.")
    p.add_argument("--format", choices=["text", "json"], default="text")
    sub = p.add_subparsers(dest="command", required=True)

    def leaf(parent, name: str, handler: Callable, *files: str, **kw):
        q = parent.add_parser(name, **kw)
        for f in files:
            q.add_argument(f)
        q.set_defaults(handler=handler)
        return q

    leaf(sub, "homology", cmd_homology, "complex", help="mod-2 Betti numbers and chi")
    q = leaf(sub, "eh-dims", cmd_eh_dims, "complex", help="dimensions of Eh_n for n up to --max-degree")
    q.add_argument("--max-degree", type=int, required=True)
    q = leaf(sub, "mu", cmd_mu, "sw", "target", help="image of a singular manifold in H_* (x) Z/2[t]")
    q.add_argument("--degree", type=int, required=True)

    strat = sub.add_parser("stratifold").add_subparsers(dest="action", required=True)
    leaf(strat, "validate", cmd_st_validate, "diagram")
    leaf(strat, "cone", cmd_st_cone, "diagram")
    leaf(strat, "classify", cmd_st_classify, "diagram")
    for name, handler in (("product", cmd_st_product), ("union", cmd_st_union), ("glue", cmd_st_glue)):
        leaf(strat, name, handler, "first", "second")

    grp = sub.add_parser("group").add_subparsers(dest="action", required=True)
    for name, handler in (("order", cmd_group_order), ("subgroups", cmd_group_subgroups),
                          ("marks", cmd_group_marks), ("vh", cmd_group_vh)):
        leaf(grp, name, handler, "group")

    eq = sub.add_parser("equivariant").add_subparsers(dest="action", required=True)
    leaf(eq, "chi", cmd_eq_chi, "group", "cells")
    for name, handler in (("classify", cmd_eq_classify), ("classify-naive", cmd_eq_classify_naive),
                          ("fixed", cmd_eq_fixed)):
        q = leaf(eq, name, handler, "diagram")
        q.add_argument("--group", help="group JSON, if the diagram does not embed one")
        if name == "fixed":
            q.add_argument("--subgroup", type=int, required=True, help="subgroup class index")
    return p


def _emit(fmt: str, payload: Any, lines: list[str], stream) -> None:
    if fmt == "json":
        stream.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        for line in lines:
            stream.write(line + "\n")


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload, lines = args.handler(args)
    except (st.NotEulerError, ValidationFailed) as exc:
        if isinstance(exc, ValidationFailed):
            _emit(args.format, exc.payload, exc.lines, out)
        else:
            err.write(f"error: {exc}\n")
        return EXIT_INVALID
    except (ValueError, KeyError, IndexError, TypeError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_MALFORMED
    _emit(args.format, payload, lines, out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
