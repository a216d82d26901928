"""Command-line front end.

Groups are named by constructor expressions::

    zadd(6)  zmul(15)  sym(3)  alt(4)  file(z15.json)
    subgroup((1 4 7 13), zmul(15))
    cyclic((1 2 0), sym(3))
    quotient(zmul(13), cyclic(3, zmul(13)))

Elements are written as integers or parenthesized sequences, e.g. ``(1 2 0)``;
JSON-style ``[1, 2, 0]`` is accepted too.

Exit status: 0 success, 1 usage or parse error, 2 mathematical failure.
"""

from __future__ import annotations

import argparse
import math
import re
import sys
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from . import families
from .classes import cauchy_trace, cauchy_witness, center, check_class_equation, conjs_list
from .core import (
    Elem,
    Group,
    RawTable,
    check_abelian,
    check_group,
    check_subgroup,
    format_elem,
    make_subgroup,
)
from .cyclic import cyclic, elt_of_ord, ord, powers
from .errors import GroupTheoryError, GuardError, NotNormalError, ResourceLimitError
from .persist import MalformedDocumentError, encode, load_group, save_group
from .quotient import QUOTIENT, check_normal, quotient_group

DEFAULT_MAX_ORDER = 1000

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MATH = 2


class SpecSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class Spec:
    kind: str
    args: tuple

    def __str__(self) -> str:
        parts = []
        for a in self.args:
            if isinstance(a, Spec):
                parts.append(str(a))
            elif isinstance(a, str):
                parts.append(a)
            else:
                parts.append(format_elem(a))
        return f"{self.kind}({', '.join(parts)})"


_INT_FAMILIES = ("zadd", "zmul", "sym", "alt")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise SpecSyntaxError(f"{msg} at column {self.pos + 1} in {self.text!r}")

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self) -> int:
        self.skip()
        m = re.compile(r"\d+").match(self.text, self.pos)
        if not m:
            self.error("expected an integer")
        self.pos = m.end()
        return int(m.group())

    def elem(self) -> Elem:
        ch = self.peek()
        if ch.isdigit():
            return self.integer()
        if ch in "([":
            close = ")" if ch == "(" else "]"
            self.pos += 1
            items = []
            while True:
                if self.peek() == close:
                    self.pos += 1
                    break
                if self.peek() == ",":
                    self.pos += 1
                    continue
                if not self.peek():
                    self.error(f"unterminated element, expected {close!r}")
                items.append(self.elem())
            return tuple(items)
        self.error("expected an element")

    def spec(self) -> Spec:
        self.skip()
        m = re.compile(r"[A-Za-z_]\w*").match(self.text, self.pos)
        if not m:
            self.error("expected a group constructor")
        name = m.group()
        self.pos = m.end()
        self.expect("(")
        if name in _INT_FAMILIES:
            args = (self.integer(),)
        elif name == "file":
            args = (self.path(),)
        elif name == "subgroup":
            l = self.elem()
            if not isinstance(l, tuple):
                self.error("expected an element list")
            self.expect(",")
            args = (l, self.spec())
        elif name == "cyclic":
            a = self.elem()
            self.expect(",")
            args = (a, self.spec())
        elif name == "quotient":
            g = self.spec()
            self.expect(",")
            args = (g, self.spec())
        else:
            self.pos = m.start()
            self.error(f"unknown constructor {name!r}")
        self.expect(")")
        return Spec(name, args)

    def path(self) -> str:
        self.skip()
        if self.peek() in "\"'":
            q = self.peek()
            end = self.text.find(q, self.pos + 1)
            if end < 0:
                self.error("unterminated quoted path")
            p = self.text[self.pos + 1 : end]
            self.pos = end + 1
            return p
        depth = 0
        start = self.pos
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch == "(":
                depth += 1
            elif ch == ")":
                if depth == 0:
                    break
                depth -= 1
            self.pos += 1
        p = self.text[start : self.pos].strip()
        if not p:
            self.error("expected a path")
        return p

    def done(self):
        if self.peek():
            self.error("unexpected trailing input")


def parse_spec(text: str) -> Spec:
    p = _Parser(text)
    s = p.spec()
    p.done()
    return s


def parse_elem(text: str) -> Elem:
    p = _Parser(text)
    x = p.elem()
    p.done()
    return x


class Evaluator:
    """Builds the groups named by specs, memoizing shared subexpressions."""

    def __init__(self, max_order: Optional[int] = DEFAULT_MAX_ORDER, force: bool = False, assoc: bool = False):
        self.max_order = None if force else max_order
        self.force = force
        self.assoc = assoc
        self._memo: Dict[Spec, Group] = {}

    def _perm_kwargs(self, n: int) -> dict:
        kw = {"max_n": None if self.force else families.MAX_PERM_DEGREE}
        if self.assoc:
            kw["assoc"] = True
        return kw

    def _gate(self, spec: Spec, order: int):
        if self.max_order is not None and order > self.max_order:
            raise ResourceLimitError(
                f"{spec} has order {order}, above --max-order {self.max_order}; use --force"
            )

    def _estimate(self, spec: Spec) -> int:
        n = spec.args[0]
        if spec.kind in ("zadd", "zmul"):
            return n
        if spec.kind == "sym":
            return math.factorial(n) if n <= 20 else 10**20
        if spec.kind == "alt":
            return max(1, math.factorial(n) // 2) if n <= 20 else 10**20
        return 0

    def group(self, spec: Spec) -> Group:
        if spec not in self._memo:
            self._memo[spec] = self._build(spec)
        return self._memo[spec]

    def _build(self, spec: Spec) -> Group:
        kind, args = spec.kind, spec.args
        if kind in _INT_FAMILIES:
            self._gate(spec, self._estimate(spec))
            if kind == "zadd":
                return families.zadd(args[0])
            if kind == "zmul":
                return families.zmul(args[0])
            ctor = families.sym if kind == "sym" else families.alt
            return ctor(args[0], **self._perm_kwargs(args[0]))
        if kind == "file":
            raw = load_group(args[0])
            self._gate(spec, raw.order)
            return Group(raw)
        if kind == "subgroup":
            return make_subgroup(args[0], self.group(args[1]))
        if kind == "cyclic":
            return cyclic(args[0], self.group(args[1]))
        if kind == "quotient":
            return quotient_group(self.group(args[0]), self.group(args[1]))
        raise SpecSyntaxError(f"unknown constructor {kind!r}")

    def raw(self, spec: Spec) -> Tuple[RawTable, Optional[Group], bool]:
        """The unvalidated table for ``spec``, the group it should sit in
        (for subgroup expressions), and whether to scan associativity."""
        kind, args = spec.kind, spec.args
        if kind in _INT_FAMILIES:
            self._gate(spec, self._estimate(spec))
            fam = {"zadd": families.ZADD, "zmul": families.ZMUL,
                   "sym": families.SYM, "alt": families.ALT}[kind]
            if fam.guard is not None and not fam.guard(*args):
                raise GuardError(f"{spec}: parameters fail the guard")
            assoc = True
            if kind in ("sym", "alt"):
                if not self.force and args[0] > families.MAX_PERM_DEGREE:
                    raise ResourceLimitError(f"{spec} exceeds degree {families.MAX_PERM_DEGREE}; use --force")
                assoc = self.assoc or args[0] <= 5
            return families.build_light(fam, *args), None, assoc
        if kind == "file":
            raw = load_group(args[0])
            self._gate(spec, raw.order)
            return raw, None, True
        if kind in ("subgroup", "cyclic"):
            g = self.group(args[1])
            l = list(args[0]) if kind == "subgroup" else powers(args[0], g)
            rows = [[g.op(x, y) for y in l] for x in l]
            return RawTable(l, rows), g, True
        if kind == "quotient":
            g, h = self.group(args[0]), self.group(args[1])
            cex = check_normal(h, g)
            if cex is not None:
                raise NotNormalError(cex)
            return families.build_light(QUOTIENT, g, h), None, True
        raise SpecSyntaxError(f"unknown constructor {kind!r}")


def render_table(t) -> str:
    """The table in parenthesized row layout, one row per line."""
    rows = ["(" + " ".join(format_elem(x) for x in row) + ")" for row in t.table]
    return "(" + "\n ".join(rows) + ")"


def _emit(g: Group, args) -> None:
    if args.out:
        save_group(g, args.out)
    if args.format == "json":
        sys.stdout.write(encode(g))
    else:
        print(render_table(g))


def cmd_build(args, ev: Evaluator) -> int:
    _emit(ev.group(parse_spec(args.spec)), args)
    return EXIT_OK


def cmd_subgroup(args, ev: Evaluator) -> int:
    g = ev.group(parse_spec(args.spec))
    l = parse_elem(args.elements)
    if not isinstance(l, tuple):
        l = (l,)
    _emit(make_subgroup(l, g), args)
    return EXIT_OK


def cmd_cyclic(args, ev: Evaluator) -> int:
    g = ev.group(parse_spec(args.spec))
    _emit(cyclic(parse_elem(args.element), g), args)
    return EXIT_OK


def cmd_quotient(args, ev: Evaluator) -> int:
    g = ev.group(parse_spec(args.spec))
    h = ev.group(parse_spec(args.sub))
    _emit(quotient_group(g, h), args)
    return EXIT_OK


def cmd_verify(args, ev: Evaluator) -> int:
    spec = parse_spec(args.spec)
    raw, parent, assoc = ev.raw(spec)
    report = check_group(raw, assoc=assoc)
    print(report)
    if not report.passed:
        return EXIT_MATH
    print(f"order: {raw.order}")
    if not assoc:
        print("associativity: skipped (pass --assoc to scan)")
    if parent is not None:
        cex = check_subgroup(Group(raw, _report=report), parent)
        if cex is not None:
            print(f"subgroupp: FAIL\n  operations disagree: counterexample {format_elem(cex[0])} {format_elem(cex[1])}")
            return EXIT_MATH
        print("subgroupp: PASS")
    return EXIT_OK


def cmd_analyze(args, ev: Evaluator) -> int:
    g = ev.group(parse_spec(args.spec))
    print(f"order: {g.order}")
    cex = check_abelian(g)
    if cex is None:
        print("abelian: yes")
    else:
        print(f"abelian: no (counterexample {format_elem(cex[0])} {format_elem(cex[1])})")
    z = center(g)
    print(f"center: order {z.order}: " + " ".join(format_elem(x) for x in z.elements))
    hist = Counter(ord(x, g) for x in g.elements)
    print("element orders: " + " ".join(f"{k}:{hist[k]}" for k in sorted(hist)))
    gen = elt_of_ord(g.order, g)
    if gen is None:
        print(f"cyclic: no (no element of order {g.order})")
    else:
        print(f"cyclic: yes (generator {format_elem(gen)})")
    classes = conjs_list(g)
    sizes = [len(c) for c in classes]
    print("nontrivial class sizes: " + (" ".join(map(str, sizes)) if sizes else "none"))
    ok = check_class_equation(g)
    terms = " + ".join(str(k) for k in [z.order] + sizes)
    print(f"class equation: {terms} = {g.order} ({'verified' if ok else 'FAILED'})")
    return EXIT_OK if ok else EXIT_MATH


def cmd_cauchy(args, ev: Evaluator) -> int:
    g = ev.group(parse_spec(args.spec))
    p = args.p
    w = cauchy_witness(g, p)
    k = ord(w, g)
    print(f"witness: {format_elem(w)}")
    print(f"ord: {k}")
    if args.trace:
        t = cauchy_trace(g, p)
        for kind, x, n in t.steps:
            at = "" if x is None else f" of {format_elem(x)}"
            print(f"  {kind}{at}: order {n}")
        print(f"  constructed witness: {format_elem(t.witness)} (ord {ord(t.witness, g)})")
    return EXIT_OK if k == p else EXIT_MATH


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                        help="refuse groups larger than this (default %(default)s)")
    common.add_argument("--force", action="store_true", help="lift the size limits")
    common.add_argument("--assoc", action="store_true",
                        help="run the associativity scan even for degree-6 permutation groups")

    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("--format", choices=("text", "json"), default="text")
    out.add_argument("--out", metavar="PATH", help="also save the group document here")

    parser = _ArgParser(prog="cayley", description="Finite groups as operation tables.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgParser)

    p = sub.add_parser("build", parents=[common, out], help="build and print a group")
    p.add_argument("spec")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", parents=[common], help="check the group axioms")
    p.add_argument("spec")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("analyze", parents=[common], help="center, element orders, classes")
    p.add_argument("spec")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("quotient", parents=[common, out], help="quotient by a normal subgroup")
    p.add_argument("spec")
    p.add_argument("sub")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("cauchy", parents=[common], help="find an element of prime order")
    p.add_argument("spec")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("--trace", action="store_true", help="also show the inductive construction")
    p.set_defaults(func=cmd_cauchy)

    p = sub.add_parser("subgroup", parents=[common, out], help="subgroup with a given element list")
    p.add_argument("spec")
    p.add_argument("elements")
    p.set_defaults(func=cmd_subgroup)

    p = sub.add_parser("cyclic", parents=[common, out], help="cyclic subgroup generated by an element")
    p.add_argument("spec")
    p.add_argument("element")
    p.set_defaults(func=cmd_cyclic)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    ev = Evaluator(max_order=args.max_order, force=args.force, assoc=args.assoc)
    try:
        return args.func(args, ev)
    except (SpecSyntaxError, MalformedDocumentError, ResourceLimitError, OSError) as exc:
        print(f"cayley: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GroupTheoryError as exc:
        print(f"cayley: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
