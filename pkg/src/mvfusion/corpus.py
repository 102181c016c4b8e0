"""Golden-case corpus: parsing and checking fusion results against it."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .fusion import FusionResult, fuse
from .idealkit import Ideal, saturate
from .polyring import Ring, parse_polynomial
from .tableaux import Tableau


class CorpusError(ValueError):
    pass


@dataclass
class Case:
    name: str
    m: int
    inputs: tuple[str, str]
    expect: dict[str, int]
    relations: list[tuple[str, str]] = field(default_factory=list)   # (submatrix label, text)
    components: dict[str, list[str]] = field(default_factory=dict)
    primaries: dict[str, list[str]] = field(default_factory=dict)
    errata: list[tuple[str, str]] = field(default_factory=list)   # (printed, corrected)

    def tableaux(self) -> tuple[Tableau, Tableau]:
        return Tableau.parse(self.inputs[0], self.m), Tableau.parse(self.inputs[1], self.m)


def default_corpus_path() -> Path:
    return Path(str(resources.files("mvfusion") / "data" / "corpus.txt"))


def parse_expect(text: str) -> dict[str, int]:
    out = {}
    for item in text.split():
        tab, _, mult = item.rpartition(":")
        if not tab or not mult.isdigit():
            raise CorpusError(f"bad expectation {item!r}")
        out[tab] = int(mult)
    return out


def _split_gens(text: str) -> list[str]:
    return [g.strip() for g in text.split(";") if g.strip()]


def parse_corpus(text: str) -> list[Case]:
    cases: list[Case] = []
    cur: dict | None = None

    def finish():
        if cur is None:
            return
        for key in ("in", "expect"):
            if key not in cur:
                raise CorpusError(f"case {cur.get('case', len(cases) + 1)} lacks '{key}:'")
        ins = cur["in"].split()
        if len(ins) != 2:
            raise CorpusError(f"'in:' needs two tableaux, got {cur['in']!r}")
        m = int(cur.get("m", 0)) or max((int(ch) for t in ins for ch in t if ch.isdigit()), default=1)
        cases.append(Case(cur.get("case", f"case{len(cases) + 1}"), m, (ins[0], ins[1]),
                          parse_expect(cur["expect"]), cur["relations"], cur["components"],
                          cur["primaries"], cur["errata"]))

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, val = line.partition(":")
        if not sep:
            raise CorpusError(f"line {lineno}: expected 'key: value'")
        key, val = key.strip(), val.strip()
        if key in ("case", "in") and cur is not None and key in cur:
            finish()
            cur = None
        if cur is None:
            cur = {"relations": [], "components": {}, "primaries": {}, "errata": []}
        if key == "relation":
            mt = re.match(r"^(A\d+)\s*:\s*(.*)$", val)
            label, body = (mt.group(1), mt.group(2)) if mt else ("", val)
            cur["relations"].extend((label, g) for g in _split_gens(body))
        elif key in ("component", "primary"):
            tab, _, gens = val.partition(":")
            target = cur["components"] if key == "component" else cur["primaries"]
            target[tab.strip()] = _split_gens(gens)
        elif key == "erratum":
            old, arrow, new = val.partition("->")
            if not arrow:
                raise CorpusError(f"line {lineno}: erratum needs 'printed -> corrected'")
            cur["errata"].append((old.strip(), new.strip()))
        elif key in ("case", "m", "in", "expect"):
            cur[key] = val
        else:
            raise CorpusError(f"line {lineno}: unknown key {key!r}")
    finish()
    return cases


def load_corpus(path: str | Path | None = None) -> list[Case]:
    p = Path(path) if path is not None else default_corpus_path()
    try:
        text = p.read_text()
    except OSError as exc:
        raise CorpusError(f"cannot read corpus {p}: {exc}") from exc
    return parse_corpus(text)


def _ideal(ring: Ring, gens: list[str]) -> Ideal:
    return Ideal(ring, [parse_polynomial(g, ring) for g in gens])


def corrected_relations(case: Case) -> list[tuple[str, str]]:
    """Relations with the case's errata applied."""
    fix = dict(case.errata)
    unused = set(fix) - {g for _, g in case.relations}
    if unused:
        raise CorpusError(f"case {case.name}: erratum matches no relation: {sorted(unused)}")
    return [(label, fix.get(g, g)) for label, g in case.relations]


def check_case(case: Case, mode: str = "paper", result: FusionResult | None = None,
               verbatim: bool = False) -> tuple[FusionResult, list[str]]:
    """Run one case; return the result and a list of mismatch descriptions.

    Relations are compared after applying the case's errata unless ``verbatim``.
    """
    t1, t2 = case.tableaux()
    if result is None:
        result = fuse(t1, t2, mode)
    problems = []
    got = {str(c.tableau): c.multiplicity for c in result.components}
    if got != case.expect:
        problems.append(f"components: expected {case.expect}, got {got}")
    ring = result.F.ring
    relations = case.relations if verbatim else corrected_relations(case)
    if relations:
        R = _ideal(ring, [g for _, g in relations])
        if saturate(R, ring.gen("s")) != result.F:
            problems.append("relations: saturated ideal differs from the computed family ideal")
    by_tab = {str(c.tableau): c for c in result.components}
    for tab, gens in case.components.items():
        c = by_tab.get(tab)
        if c is None:
            problems.append(f"component {tab}: missing")
        elif _ideal(ring, gens) != c.prime:
            problems.append(f"component {tab}: prime ideal differs")
    for tab, gens in case.primaries.items():
        c = by_tab.get(tab)
        if c is None:
            problems.append(f"primary {tab}: missing")
        elif _ideal(ring, gens) != c.primary:
            problems.append(f"primary {tab}: primary ideal differs")
    if result.degree_sum() != result.degree_J:
        problems.append("degree additivity fails")
    return result, problems
