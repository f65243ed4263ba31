"""JSON files for groups, braces, permutation sets, semidirect specs and catalogs.

Everything is written with sorted keys so equal objects give identical bytes.
Brace references inside a spec file are resolved relative to that file.
"""

from __future__ import annotations

import json
from pathlib import Path

from .brace import SkewBrace, make_brace
from .enumeration import BraceCatalog, CatalogEntry
from .errors import FormatError
from .groups import FiniteGroup, make_group
from .perms import PermGroup, as_perm, perm_group
from .sdp import SdpSpec, make_spec


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def write_json(path, obj) -> None:
    Path(path).write_text(dumps(obj))


def read_json(path):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc.msg})") from None


def _field(data, key):
    if not isinstance(data, dict) or key not in data:
        raise FormatError(f"missing field {key!r}")
    return data[key]


def _table(raw, n=None) -> list:
    if not isinstance(raw, list) or not all(isinstance(r, list) for r in raw):
        raise FormatError("table must be a list of lists")
    if not all(isinstance(v, int) and not isinstance(v, bool) for r in raw for v in r):
        raise FormatError("table entries must be integers")
    if n is not None and len(raw) != n:
        raise FormatError(f"declared n = {n} but table has {len(raw)} rows")
    return raw


def group_to_json(G: FiniteGroup) -> dict:
    return {"n": G.n, "table": [list(r) for r in G.table]}


def group_from_json(data) -> FiniteGroup:
    return make_group(_table(_field(data, "table"), _field(data, "n")))


def brace_to_json(b: SkewBrace) -> dict:
    return {"n": b.n, "dot": [list(r) for r in b.dot.table], "circ": [list(r) for r in b.circ.table]}


def brace_from_json(data) -> SkewBrace:
    n = _field(data, "n")
    return make_brace(_table(_field(data, "dot"), n), _table(_field(data, "circ"), n))


def permset_to_json(S) -> dict:
    perms = sorted(tuple(p) for p in S)
    return {"deg": len(perms[0]) if perms else 0, "perms": [list(p) for p in perms]}


def permset_from_json(data) -> PermGroup:
    deg = _field(data, "deg")
    raw = _table(_field(data, "perms"))
    return perm_group([as_perm(p, deg) for p in raw], deg)


def spec_to_json(spec: SdpSpec) -> dict:
    return {
        "A": brace_to_json(spec.A),
        "B": brace_to_json(spec.B),
        "phi": [list(p) for p in spec.phi.image],
        "theta": [list(p) for p in spec.theta.image],
    }


def _brace_ref(ref, base: Path) -> SkewBrace:
    if isinstance(ref, str):
        return brace_from_json(read_json(base / ref))
    return brace_from_json(ref)


def spec_from_json(data, base=".") -> SdpSpec:
    """A and B are brace objects or paths to brace files."""
    base = Path(base)
    A = _brace_ref(_field(data, "A"), base)
    B = _brace_ref(_field(data, "B"), base)
    return make_spec(A, B, _table(_field(data, "phi")), _table(_field(data, "theta")))


def catalog_to_json(cat: BraceCatalog) -> dict:
    return {
        "circ": group_to_json(cat.circ),
        "entries": [
            {"dot": [list(r) for r in e.dot], "type": e.type, "provenance": e.provenance}
            for e in sorted(cat.entries, key=lambda e: e.dot)
        ],
    }


def catalog_from_json(data) -> BraceCatalog:
    circ = group_from_json(_field(data, "circ"))
    entries = []
    for raw in _field(data, "entries"):
        b = make_brace(_table(_field(raw, "dot"), circ.n), circ)
        entries.append(CatalogEntry(b, _field(raw, "type"), _field(raw, "provenance")))
    return BraceCatalog(circ, tuple(sorted(entries, key=lambda e: e.dot)))


def load(path, kind: str):
    """Read a file of the given kind: group, brace, permset, spec or catalog."""
    data = read_json(path)
    if kind == "spec":
        return spec_from_json(data, Path(path).parent)
    readers = {
        "group": group_from_json,
        "brace": brace_from_json,
        "permset": permset_from_json,
        "catalog": catalog_from_json,
    }
    return readers[kind](data)
