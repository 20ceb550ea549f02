"""Scenario files: parsing and running.

::

    load figure2.txt as fig2        # graphs by name, the file as a family
    sample h P10 mode=relabel seed=1 count=3 basis=dominating
    scenario fz F_ZERO G=P2 H=h
    scenario t1 TRANSFER G1=P3 G2=C3 H=K2

Graph references are loaded graph names, aliases, or constructors ``P<n>``,
``C<n>``, ``K<n>``, ``N<n>`` and ``K<r>x<s>``; family arguments take a
comma-separated list.  Every scenario accepts ``expect=`` (overrides the
expected value) and ``budget=``.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from pathlib import Path

from . import verify
from .errors import ParseError, SimdimError
from .graph import ADJ, Graph, GraphFamily, complete, complete_bipartite, cycle, empty, path
from .families import sample_members
from .resolving import enumerate_bases, is_dominating, min_generator
from .search import DEFAULT_BUDGET
from .textio import parse_graphs

_INT, _GRAPH, _FAMILY, _WORD = "int", "graph", "family", "word"

# claim -> (required args, optional args); each arg maps to its kind
_SIGNATURES = {
    "TRANSFER": ({"G1": _GRAPH, "G2": _GRAPH, "H": _GRAPH}, {}),
    "SD_CORONA": ({"G": _FAMILY, "H": _FAMILY}, {}),
    "F_BOUNDS": ({"G": _FAMILY, "H": _FAMILY}, {}),
    "F_ZERO": ({"G": _FAMILY, "H": _FAMILY}, {}),
    "F_VMINUS1": ({"G": _FAMILY, "H": _FAMILY}, {}),
    "F_SGAMMA": ({"G": _FAMILY, "H": _FAMILY}, {}),
    "F_GAMMAPRIME": ({"G": _FAMILY, "H": _FAMILY}, {}),
    "ADIM_FORMULA": ({"n": _INT}, {}),
    "MOD5_EXISTS": ({"n": _INT}, {}),
    "MOD5_NONE": ({"n": _INT}, {}),
    "JOIN_SUM": ({"G": _FAMILY, "H": _FAMILY, "H2": _FAMILY}, {"case": _WORD}),
    "JOIN_DOMINATES": ({"H": _FAMILY, "H2": _FAMILY}, {}),
    "JOIN_KT": ({"G": _FAMILY, "t": _INT, "H": _FAMILY}, {}),
    "PERM_FAMILY": ({"G": _GRAPH},
                    {"count": _INT, "seed": _INT, "mode": _WORD, "basis": _WORD, "extra": _FAMILY}),
    "NT_UNION": ({"G": _FAMILY, "t": _INT, "H": _FAMILY}, {}),
    "COMPLEMENT_INV": ({"F": _FAMILY}, {}),
    "REMARK_BOUNDS": ({"F": _FAMILY}, {}),
    "P5C5_EXAMPLE": ({"G": _GRAPH}, {}),
}
_COMMON = {"expect": _WORD, "budget": _INT}
assert set(_SIGNATURES) == set(verify.CLAIMS)

_BUILTIN = re.compile(r"^(?:([PCKN])(\d+)|K(\d+)x(\d+))$")


@dataclass
class Scenario:
    id: str
    claim: str
    args: dict = field(default_factory=dict)
    line: int | None = None
    expect: str | None = None
    budget: int | None = DEFAULT_BUDGET


def builtin_graph(token: str) -> Graph | None:
    m = _BUILTIN.match(token)
    if not m:
        return None
    kind, n, r, s = m.groups()
    if r is not None:
        return complete_bipartite(int(r), int(s))
    return {"P": path, "C": cycle, "K": complete, "N": empty}[kind](int(n))


class _Namespace:
    def __init__(self, source, base_dir):
        self.graphs: dict[str, Graph] = {}
        self.families: dict[str, GraphFamily] = {}
        self.source = source
        self.base_dir = base_dir

    def graph(self, token, lineno) -> Graph:
        if token in self.families and len(self.families[token]) == 1:
            return self.families[token][0]
        if token in self.graphs:
            return self.graphs[token]
        try:
            g = builtin_graph(token)
        except SimdimError as exc:
            raise ParseError(f"{token}: {exc}", lineno, self.source) from None
        if g is None:
            raise ParseError(f"unknown graph reference {token!r}", lineno, self.source)
        return g

    def family(self, value, lineno) -> GraphFamily:
        members = []
        for token in value.split(","):
            if token in self.families:
                members.extend(self.families[token])
            else:
                members.append(self.graph(token, lineno))
        try:
            return GraphFamily(tuple(members))
        except SimdimError as exc:
            raise ParseError(f"family {value!r}: {exc}", lineno, self.source) from None


def _keyvalues(tokens, lineno, source) -> dict:
    out = {}
    for tok in tokens:
        key, sep, value = tok.partition("=")
        if not sep or not key or not value:
            raise ParseError(f"expected key=value, got {tok!r}", lineno, source)
        if key in out:
            raise ParseError(f"duplicate argument {key!r}", lineno, source)
        out[key] = value
    return out


def _to_int(key, value, lineno, source) -> int:
    try:
        return int(value)
    except ValueError:
        raise ParseError(f"{key} must be an integer, got {value!r}", lineno, source) from None


def resolve_basis(g: Graph, spec: str, lineno, source) -> frozenset[int]:
    if spec == "auto":
        return min_generator(g, ADJ)[1]
    if spec == "dominating":
        for b in enumerate_bases(g, ADJ).bases:
            if is_dominating(g, b):
                return b
        raise ParseError(f"{g.name} has no dominating adjacency basis", lineno, source)
    labels = [_to_int("basis", x, lineno, source) for x in spec.split(",")]
    try:
        return g.from_labels(labels)
    except SimdimError as exc:
        raise ParseError(f"basis: {exc}", lineno, source) from None


def parse_suite(text: str, source: str | None = None, base_dir=None) -> list[Scenario]:
    """Parse a suite, loading and sampling graphs as directives appear."""
    base_dir = Path(base_dir) if base_dir is not None else Path.cwd()
    ns = _Namespace(source, base_dir)
    scenarios: list[Scenario] = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *rest = line.split()
        if key == "load":
            if len(rest) not in (1, 3) or (len(rest) == 3 and rest[1] != "as"):
                raise ParseError("usage: load <file> [as <alias>]", lineno, source)
            target = base_dir / rest[0]
            try:
                graphs = parse_graphs(target.read_text(encoding="utf-8"), str(target))
            except OSError as exc:
                raise ParseError(f"cannot read {rest[0]}: {exc.strerror}", lineno, source) from None
            for g in graphs:
                ns.graphs[g.name] = g
            alias = rest[2] if len(rest) == 3 else target.stem
            try:
                ns.families[alias] = GraphFamily(tuple(graphs))
            except SimdimError:
                pass  # graphs of mixed order are only usable by name
        elif key == "sample":
            if len(rest) < 2:
                raise ParseError("usage: sample <alias> <graph> [mode= seed= count= basis=]", lineno, source)
            alias, ref, opts = rest[0], rest[1], _keyvalues(rest[2:], lineno, source)
            unknown = set(opts) - {"mode", "seed", "count", "basis"}
            if unknown:
                raise ParseError(f"unknown sample option {sorted(unknown)[0]!r}", lineno, source)
            g = ns.graph(ref, lineno)
            basis = resolve_basis(g, opts.get("basis", "auto"), lineno, source)
            try:
                ns.families[alias] = sample_members(
                    g, basis, opts.get("mode", "relabel"),
                    _to_int("seed", opts.get("seed", "0"), lineno, source),
                    _to_int("count", opts.get("count", "4"), lineno, source))
            except SimdimError as exc:
                raise ParseError(f"sample {alias}: {exc}", lineno, source) from None
        elif key == "scenario":
            if len(rest) < 2:
                raise ParseError("usage: scenario <id> <claim> key=value ...", lineno, source)
            sid, claim, opts = rest[0], rest[1], _keyvalues(rest[2:], lineno, source)
            if claim not in _SIGNATURES:
                raise ParseError(f"unknown claim {claim!r}", lineno, source)
            if sid in seen:
                raise ParseError(f"duplicate scenario id {sid!r}", lineno, source)
            seen.add(sid)
            required, optional = _SIGNATURES[claim]
            missing = [k for k in required if k not in opts]
            if missing:
                raise ParseError(f"{claim} needs {', '.join(missing)}", lineno, source)
            scenario = Scenario(sid, claim, line=lineno)
            for k, value in opts.items():
                kind = required.get(k) or optional.get(k) or _COMMON.get(k)
                if kind is None:
                    raise ParseError(f"{claim} takes no argument {k!r}", lineno, source)
                if k == "expect":
                    scenario.expect = value
                elif k == "budget":
                    scenario.budget = _to_int(k, value, lineno, source)
                elif kind == _INT:
                    scenario.args[k] = _to_int(k, value, lineno, source)
                elif kind == _GRAPH:
                    scenario.args[k] = ns.graph(value, lineno)
                elif kind == _FAMILY:
                    scenario.args[k] = ns.family(value, lineno)
                else:
                    scenario.args[k] = value
            if claim == "PERM_FAMILY" and "basis" in scenario.args:
                scenario.args["basis"] = resolve_basis(scenario.args["G"], scenario.args["basis"],
                                                       lineno, source)
            scenarios.append(scenario)
        else:
            raise ParseError(f"unknown directive {key!r}", lineno, source)
    return scenarios


def _dispatch(s: Scenario) -> verify.VerificationReport:
    a, sid, budget = s.args, s.id, s.budget
    c = s.claim
    if c == "TRANSFER":
        return verify.check_transfer(a["G1"], a["G2"], a["H"], scenario_id=sid)
    if c == "SD_CORONA":
        return verify.check_sd_corona(a["G"], a["H"], budget, scenario_id=sid)
    if c == "F_BOUNDS":
        return verify.check_f_bounds(a["G"], a["H"], budget, scenario_id=sid)
    if c.startswith("F_"):
        return verify.check_f_case(a["G"], a["H"], c[2:], budget, scenario_id=sid)
    if c == "ADIM_FORMULA":
        return verify.check_adim_formula(a["n"], budget, scenario_id=sid)
    if c.startswith("MOD5"):
        report = verify.check_mod5(a["n"], budget, scenario_id=sid)
        if report.status in (verify.PASS, verify.FAIL) and report.claim != c:
            report.status = verify.INAPPLICABLE
            report.note = f"n={a['n']} has residue {a['n'] % 5} mod 5, outside the claim"
        return report
    if c == "JOIN_SUM":
        return verify.check_join(a["G"], a["H"], a["H2"], a.get("case", "SUM"), budget, scenario_id=sid)
    if c == "JOIN_DOMINATES":
        return verify.check_join_dominates(a["H"], a["H2"], budget, scenario_id=sid)
    if c == "JOIN_KT":
        return verify.check_join_kt(a["G"], a["t"], a["H"], budget, scenario_id=sid)
    if c == "PERM_FAMILY":
        return verify.check_perm_family(a["G"], a.get("count", 4), a.get("seed", 0),
                                        a.get("mode", "relabel"), a.get("basis"),
                                        a.get("extra", ()), budget, scenario_id=sid)
    if c == "NT_UNION":
        return verify.check_nt_union(a["G"], a["t"], a["H"], budget, scenario_id=sid)
    if c == "COMPLEMENT_INV":
        return verify.check_complement_inv(a["F"], budget, scenario_id=sid)
    if c == "REMARK_BOUNDS":
        return verify.check_remark_bounds(a["F"], budget, scenario_id=sid)
    if c == "P5C5_EXAMPLE":
        return verify.check_p5c5_example(a["G"], budget, scenario_id=sid)
    raise AssertionError(c)


def run_scenario(s: Scenario) -> verify.VerificationReport:
    report = _dispatch(s)
    report.claim = s.claim
    if s.expect is not None and report.status in (verify.PASS, verify.FAIL):
        report.expected = s.expect
        report.status = verify.PASS if verify.format_value(report.computed) == s.expect else verify.FAIL
    return report


def _read_config(config):
    if isinstance(config, os.PathLike) or (isinstance(config, str) and "\n" not in config):
        path = Path(config)
        try:
            return path.read_text(encoding="utf-8"), str(path), path.parent
        except OSError as exc:
            raise ParseError(f"cannot read suite: {exc.strerror}", None, str(path)) from None
    return config, None, None


def run_suite(config, base_dir=None, on_report=None) -> list[verify.VerificationReport]:
    """Run every scenario of a suite file (or suite text) in order.

    ``on_report`` is called with each report as soon as it is ready.
    """
    text, source, parent = _read_config(config)
    scenarios = parse_suite(text, source, base_dir if base_dir is not None else parent)
    reports = []
    for s in scenarios:
        report = run_scenario(s)
        reports.append(report)
        if on_report is not None:
            on_report(report)
    return reports


def bundled_suite() -> Path:
    return Path(__file__).parent / "data" / "paper.suite"
