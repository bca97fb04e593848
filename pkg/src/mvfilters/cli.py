"""Command-line driver: spec parsing, verification campaigns, evaluation, export.

Commands::

    mvfilters verify  <specfile> [--only id,id] [--seed N] [--max-carrier N]
                      [--json out]
    mvfilters compute <specfile> <expression>
    mvfilters export  <specfile> <filters|spectrum:K|hat:K> --format dot|csv
                      -o path

Exit codes: 0 all checks pass, 1 verification failures, 2 usage or parse
errors, 3 resource limits exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import calculus, densechain as dc, filters, spectra, verify
from .core import MvAlgebra, iter_mask, make_lukasiewicz_chain, make_product
from .errors import InvalidArgument, MvError, ResourceLimit


# ---------------------------------------------------------------------------
# algebra spec files


_SPEC_KEYS = {
    "lukasiewicz": {"kind", "n"},
    "product": {"kind", "factors"},
    "table": {"kind", "size", "oplus", "neg", "zero"},
    "dense": {"kind"},
}


def _validate_spec(obj, allow_dense: bool, path: str = "spec"):
    if not isinstance(obj, dict):
        raise InvalidArgument(f"{path}: must be an object")
    kind = obj.get("kind")
    if kind not in _SPEC_KEYS or (kind == "dense" and not allow_dense):
        allowed = sorted(k for k in _SPEC_KEYS if allow_dense or k != "dense")
        raise InvalidArgument(
            f"{path}.kind: must be one of {', '.join(allowed)} (got {kind!r})"
        )
    unknown = set(obj) - _SPEC_KEYS[kind]
    if unknown:
        raise InvalidArgument(f"{path}: unknown keys {sorted(unknown)}")
    if kind == "lukasiewicz":
        n = obj.get("n")
        if not isinstance(n, int) or isinstance(n, bool) or n < 2:
            raise InvalidArgument(f"{path}.n: must be an integer >= 2")
    elif kind == "product":
        factors = obj.get("factors")
        if not isinstance(factors, list) or len(factors) < 2:
            raise InvalidArgument(
                f"{path}.factors: must be a list of at least two specs"
            )
        for i, sub in enumerate(factors):
            _validate_spec(sub, allow_dense=False, path=f"{path}.factors[{i}]")
    elif kind == "table":
        size = obj.get("size")
        if not isinstance(size, int) or isinstance(size, bool) or size < 1:
            raise InvalidArgument(f"{path}.size: must be a positive integer")
        oplus = obj.get("oplus")
        ok = (
            isinstance(oplus, list)
            and len(oplus) == size
            and all(
                isinstance(row, list)
                and len(row) == size
                and all(isinstance(v, int) and 0 <= v < size for v in row)
                for row in oplus
            )
        )
        if not ok:
            raise InvalidArgument(
                f"{path}.oplus: must be a {size}x{size} matrix of element indices"
            )
        neg = obj.get("neg")
        if not (
            isinstance(neg, list)
            and len(neg) == size
            and all(isinstance(v, int) and 0 <= v < size for v in neg)
        ):
            raise InvalidArgument(
                f"{path}.neg: must list one element index per element"
            )
        zero = obj.get("zero")
        if not (isinstance(zero, int) and 0 <= zero < size):
            raise InvalidArgument(f"{path}.zero: must be an element index")


def parse_spec(text: str, allow_dense: bool = False) -> dict:
    """Parse and validate an algebra spec (JSON text)."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidArgument(
            f"spec syntax error at line {e.lineno}, column {e.colno}: {e.msg}"
        ) from None
    _validate_spec(obj, allow_dense=allow_dense)
    return obj


def render_spec(spec: dict) -> str:
    """Canonical text form; parse_spec(render_spec(s)) == s."""
    return json.dumps(spec, sort_keys=True)


def build_algebra(spec: dict) -> MvAlgebra:
    kind = spec["kind"]
    if kind == "lukasiewicz":
        return make_lukasiewicz_chain(spec["n"])
    if kind == "product":
        algs = [build_algebra(s) for s in spec["factors"]]
        out = algs[0]
        for nxt in algs[1:]:
            out = make_product(out, nxt)
        return out
    if kind == "table":
        return MvAlgebra(
            spec["size"],
            tuple(tuple(row) for row in spec["oplus"]),
            tuple(spec["neg"]),
            spec["zero"],
            name=f"table[{spec['size']}]",
        )
    raise InvalidArgument(f"cannot build an algebra of kind {kind!r}")


def _load_spec(path: str, allow_dense: bool) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise InvalidArgument(f"cannot read spec file {path}: {e.strerror}") from None
    return parse_spec(text, allow_dense=allow_dense)


# ---------------------------------------------------------------------------
# the compute expression grammar


class ExprError(InvalidArgument):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"expression error at position {pos}: {msg}")
        self.pos = pos


class _Parser:
    """Recursive descent for  op(arg, ...)  with raw (non-expression) atoms."""

    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def _ws(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def _expect(self, ch: str):
        self._ws()
        if self.i >= len(self.text) or self.text[self.i] != ch:
            raise ExprError(f"expected {ch!r}", self.i)
        self.i += 1

    def _name(self) -> str:
        self._ws()
        j = self.i
        while j < len(self.text) and (self.text[j].isalnum() or self.text[j] == "_"):
            j += 1
        if j == self.i:
            raise ExprError("expected an operator name", self.i)
        name, self.i = self.text[self.i : j], j
        return name

    def _raw(self) -> str:
        """Capture a raw argument up to the next top-level ',' or ')'."""
        self._ws()
        depth, j = 0, self.i
        while j < len(self.text):
            c = self.text[j]
            if c in "([":
                depth += 1
            elif c in ")]":
                if depth == 0:
                    break
                depth -= 1
            elif c == "," and depth == 0:
                break
            j += 1
        raw, self.i = self.text[self.i : j].strip(), j
        if not raw:
            raise ExprError("expected an argument", self.i)
        return raw

    def parse(self):
        node = self._node()
        self._ws()
        if self.i != len(self.text):
            raise ExprError("trailing input", self.i)
        return node

    def _node(self):
        pos = self.i
        name = self._name()
        self._expect("(")
        shapes = {
            "up": ("raw",),
            "P": ("raw",),
            "cut": ("raw", "raw"),
            "plus": ("expr",),
            "kernel": ("expr",),
            "sqto": ("expr", "expr"),
            "phi": ("expr", "expr"),
            "T": ("expr", "expr"),
            "Ju": ("expr", "expr"),
            "Jd": ("expr", "expr"),
            "subord": ("expr", "raw"),
        }
        if name not in shapes:
            raise ExprError(f"unknown operator {name!r}", pos)
        args = []
        for k, shape in enumerate(shapes[name]):
            if k:
                self._expect(",")
            args.append(self._node() if shape == "expr" else self._raw())
        self._expect(")")
        return (name, args, pos)


def _parse_fraction(raw: str, pos: int) -> Fraction:
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError):
        raise ExprError(f"not a rational number: {raw!r}", pos) from None


class _FiniteEval:
    def __init__(self, a: MvAlgebra):
        self.a = a

    def _element(self, raw: str, pos: int) -> int:
        want = raw.replace(" ", "")
        for i, lab in enumerate(self.a.labels):
            if lab.replace(" ", "") == want:
                return i
        raise ExprError(f"no element labelled {raw!r}", pos)

    def eval(self, node) -> int:
        name, args, pos = node
        a = self.a
        if name == "cut":
            raise ExprError("cut(...) needs the dense chain", pos)
        if name == "up":
            return a.up_mask[self._element(args[0], pos)]
        if name == "P":
            try:
                k = int(args[0])
            except ValueError:
                raise ExprError(f"P(...) takes an index, got {args[0]!r}", pos) \
                    from None
            primes = filters.enumerate_implication_filters(a, prime_only=True)
            if not 0 <= k < len(primes):
                raise ExprError(
                    f"P({k}) out of range; {len(primes)} prime implication "
                    "filters exist", pos
                )
            return primes[k]
        if name == "plus":
            return calculus.set_plus(a, self.eval(args[0]))
        if name == "kernel":
            return calculus.kernel(a, self.eval(args[0]))
        if name == "sqto":
            return calculus.sqto(a, self.eval(args[0]), self.eval(args[1]))
        if name == "phi":
            return calculus.phi(a, self.eval(args[0]), self.eval(args[1]))
        if name == "T":
            return calculus.tensor_up(a, self.eval(args[0]), self.eval(args[1]))
        if name == "Ju":
            return calculus.j_up(a, self.eval(args[0]), self.eval(args[1]))
        if name == "Jd":
            return calculus.j_down(a, self.eval(args[0]), self.eval(args[1]))
        if name == "subord":
            return calculus.subordinate(
                a, self.eval(args[0]), self._element(args[1], pos)
            )
        raise ExprError(f"unknown operator {name!r}", pos)


class _DenseEval:
    def eval(self, node) -> dc.Cut:
        name, args, pos = node
        if name == "cut":
            p = _parse_fraction(args[0], pos)
            kind = args[1].lower()
            if kind not in ("open", "closed"):
                raise ExprError("cut kind must be open or closed", pos)
            cut = dc.Cut(p, dc.Kind.OPEN if kind == "open" else dc.Kind.CLOSED)
            if not cut.is_proper:
                raise ExprError(f"{cut} is not a proper cut filter", pos)
            return cut
        if name == "plus":
            return dc.cut_plus(self.eval(args[0]))
        if name == "kernel":
            return dc.kernel_of_cut(self.eval(args[0]))
        if name == "sqto":
            return dc.cut_sqto(self.eval(args[0]), self.eval(args[1]))
        raise ExprError(
            f"operator {name!r} is not available on the dense chain", pos
        )


def evaluate(spec: dict, expression: str) -> str:
    node = _Parser(expression).parse()
    if spec["kind"] == "dense":
        return str(_DenseEval().eval(node))
    a = build_algebra(spec)
    return a.label_set(_FiniteEval(a).eval(node))


# ---------------------------------------------------------------------------
# export


def _dot_of_containment(name: str, masks: list[int], labels) -> str:
    """Hasse diagram (covering containments only) of a family of subsets."""
    order = sorted(masks)
    lines = [f'digraph "{name}" {{', "  rankdir=BT;"]
    for m in order:
        lines.append(f'  n{m} [label="{labels(m)}"];')
    for low in order:
        for high in order:
            if low == high or low & ~high:
                continue
            if any(
                mid != low and mid != high and not (low & ~mid) and not (mid & ~high)
                for mid in order
            ):
                continue
            lines.append(f"  n{low} -> n{high};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _csv_of_hat(h: spectra.HatAlgebra) -> str:
    mv = h.as_mv
    reps = [h.spectrum.algebra.label_set(r) for r in h.representatives]
    rows = ["class," + ",".join(f'"{r}"' for r in reps)]
    rows.append("neg," + ",".join(str(mv.neg[i]) for i in range(mv.size)))
    for op, table in (("oplus", mv.oplus), ("sqto", h.sqto_table)):
        for i in range(mv.size):
            rows.append(
                f"{op}[{i}]," + ",".join(str(table[i][j]) for j in range(mv.size))
            )
    return "\n".join(rows) + "\n"


def export(spec: dict, what: str, fmt: str) -> str:
    a = build_algebra(spec)
    if what == "filters":
        if fmt != "dot":
            raise InvalidArgument("the filter order is exported as dot")
        masks = filters.enumerate_lattice_filters(a)
        return _dot_of_containment(f"filters of {a.name}", masks, a.label_set)
    kind, _, idx = what.partition(":")
    if kind in ("spectrum", "hat") and idx.isdigit():
        primes = filters.enumerate_implication_filters(a, prime_only=True)
        k = int(idx)
        if not 0 <= k < len(primes):
            raise InvalidArgument(
                f"index {k} out of range; {len(primes)} prime implication "
                "filters exist"
            )
        spec_ = spectra.prime_spectrum(a, primes[k])
        if kind == "spectrum":
            if fmt != "dot":
                raise InvalidArgument("spectra are exported as dot")
            return _dot_of_containment(
                f"spectrum {k} of {a.name}", list(spec_.members), a.label_set
            )
        if fmt != "csv":
            raise InvalidArgument("hat tables are exported as csv")
        return _csv_of_hat(spectra.build_hat(spec_))
    raise InvalidArgument(
        f"unknown export target {what!r}; use filters, spectrum:K or hat:K"
    )


# ---------------------------------------------------------------------------
# command dispatch


def cmd_verify(args) -> int:
    spec = _load_spec(args.specfile, allow_dense=True)
    if args.max_carrier is not None:
        os.environ["MVFILTERS_MAX_CARRIER"] = str(args.max_carrier)
    only = args.only.split(",") if args.only else None
    if spec["kind"] == "dense":
        report = verify.run_dense(seed=args.seed, only=only)
    else:
        a = build_algebra(spec)
        if a.size > filters.carrier_cap():
            raise ResourceLimit(
                f"carrier of {a.size} exceeds the cap of {filters.carrier_cap()}"
            )
        report = verify.run_finite(a, only=only, seed=args.seed)
    print(report.to_text())
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report.to_json() + "\n")
    return 0 if report.ok else 1


def cmd_compute(args) -> int:
    spec = _load_spec(args.specfile, allow_dense=True)
    print(evaluate(spec, args.expression))
    return 0


def cmd_export(args) -> int:
    spec = _load_spec(args.specfile, allow_dense=False)
    payload = export(spec, args.what, args.format)
    try:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload)
    except OSError as e:
        raise InvalidArgument(
            f"cannot write {args.output}: {e.strerror}"
        ) from None
    return 0


def _build_argparser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="mvfilters",
        description="filter calculus workbench for MV-algebras",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the statement verification suite")
    v.add_argument("specfile")
    v.add_argument("--only", help="comma-separated statement ids")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--max-carrier", type=int, default=None)
    v.add_argument("--json", help="also write a JSON report to this path")
    v.set_defaults(fn=cmd_verify)

    c = sub.add_parser("compute", help="evaluate a filter expression")
    c.add_argument("specfile")
    c.add_argument("expression")
    c.set_defaults(fn=cmd_compute)

    e = sub.add_parser("export", help="export filter orders or hat tables")
    e.add_argument("specfile")
    e.add_argument("what", help="filters | spectrum:K | hat:K")
    e.add_argument("--format", choices=("dot", "csv"), required=True)
    e.add_argument("-o", "--output", required=True)
    e.set_defaults(fn=cmd_export)
    return ap


def main(argv=None) -> int:
    ap = _build_argparser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        return args.fn(args)
    except ResourceLimit as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except MvError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
