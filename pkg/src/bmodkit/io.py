"""JSON interchange for modules, morphisms and sequences, plus DOT export."""
from __future__ import annotations

import json
from pathlib import Path

from . import bmods as S
from . import lattice as L
from .bmods import InvModule
from .errors import MalformedTable
from .homology import ShortDoublyExact, sdes
from .lattice import BModule, Morphism


def _builtins() -> dict:
    from . import catalog as C

    def diag(attr):
        return lambda: getattr(C.diagonal(), attr)

    def sex(attr):
        return lambda: getattr(C.s_example(), attr)

    return {
        "B": lambda: L.BOOL,
        "sB": lambda: S.s_functor(L.BOOL),
        "chain3": C.three_chain,
        "zero": S.zero_object,
        "I": diag("I"), "Q": diag("Q"), "K": diag("K"),
        "B3": sex("B3"), "S": sex("S"), "J": sex("J"),
        "R": C.r_object, "Rprime": C.r_prime_object,
        "wedge3": lambda: C.wedge(C.three_chain()),
    }


BUILTIN_NAMES = ("B", "sB", "chain3", "zero", "I", "Q", "K", "B3", "S", "J", "R", "Rprime", "wedge3")


def module_to_dict(M: BModule, name: str = "") -> dict:
    d = {"name": name, "elements": list(M.names), "join": M.table.tolist()}
    if M.sigma is not None:
        d["sigma"] = list(M.sigma)
    return d


def module_from_dict(d: dict) -> BModule:
    """Validates the laws; raises LawViolation or NotAnInvolution on bad input."""
    try:
        table, names = d["join"], d.get("elements")
    except (KeyError, TypeError) as exc:
        raise MalformedTable(f"module object needs a 'join' table: {exc}") from None
    M = L.validate_module(table, names)
    if d.get("sigma") is not None:
        return InvModule(M, d["sigma"])
    return M


def _read_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise MalformedTable(f"{path}: not valid JSON ({exc})") from None


def load_module(ref, base: Path | None = None) -> BModule:
    """A module from an inline object, a JSON path, or a built-in name."""
    if isinstance(ref, dict):
        return module_from_dict(ref)
    ref = str(ref)
    table = _builtins()
    if ref in table:
        return table[ref]()
    p = Path(ref)
    if base is not None and not p.is_absolute():
        p = base / p
    if not p.exists():
        raise FileNotFoundError(f"no module file or built-in named {ref!r}")
    return module_from_dict(_read_json(p))


def morphism_from_dict(d: dict, base: Path | None = None) -> Morphism:
    dom, cod = load_module(d["dom"], base), load_module(d["cod"], base)
    if dom.sigma is not None and cod.sigma is not None:
        return S.inv_morphism(dom, cod, d["map"])
    return Morphism(dom, cod, d["map"])


def load_morphism(path) -> Morphism:
    p = Path(path)
    return morphism_from_dict(_read_json(p), p.parent)


def morphism_to_dict(f: Morphism, dom="dom", cod="cod") -> dict:
    return {"dom": dom, "cod": cod, "map": list(f.map)}


def load_sequence(path) -> ShortDoublyExact:
    p = Path(path)
    d = _read_json(p)
    return sdes(morphism_from_dict(d["aprime"], p.parent), morphism_from_dict(d["adoubleprime"], p.parent))


def parse_subset(spec: str, M: BModule) -> list[int]:
    """A JSON file with "members", or a comma list of element names or indices."""
    p = Path(spec)
    if p.suffix == ".json" and p.exists():
        items = _read_json(p)["members"]
    else:
        items = [s.strip() for s in spec.split(",") if s.strip()]
    out = []
    for it in items:
        if isinstance(it, int) or (isinstance(it, str) and it.isdigit() and it not in M.names):
            out.append(int(it))
        else:
            out.append(M.index(it))
    return out


def to_dot(M: BModule, name: str = "M") -> str:
    """Hasse diagram; elements of one sigma-orbit share a fill colour."""
    palette = ["#fbe3d6", "#d6e9fb", "#dcf5d6", "#f5f0c8", "#ead6fb", "#d6f5f1", "#f5d6e7", "#e6e6e6"]
    lines = [f'digraph "{name}" {{', "  rankdir=BT;", '  node [shape=box, style=filled];']
    orbit = {}
    if M.sigma is not None:
        for x in range(M.n):
            orbit.setdefault(min(x, M.sigma[x]), len(orbit))
    for x in range(M.n):
        attrs = [f'label="{M.names[x]}"']
        if M.sigma is not None:
            k = orbit[min(x, M.sigma[x])]
            attrs.append(f'fillcolor="{palette[k % len(palette)]}"')
            attrs.append('shape=ellipse' if M.sigma[x] == x else 'shape=box')
        else:
            attrs.append('fillcolor="white"')
        lines.append(f"  n{x} [{', '.join(attrs)}];")
    for a, b in M.covers:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
