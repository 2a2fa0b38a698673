"""Command-line front end."""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import bmods as S
from . import homology as H
from . import io
from . import lattice as L
from .errors import (
    BModError, ConditionAFailed, LawViolation, LimitExceeded, NotCokernel, NotKernel,
)

EXIT_OK, EXIT_FAIL, EXIT_LIMIT, EXIT_USAGE = 0, 1, 2, 64


@dataclass(frozen=True)
class CliConfig:
    limit: int = L.DEFAULT_LIMIT
    format: str = "text"
    seed: int = 0

    def __post_init__(self):
        if self.limit < 1:
            raise ValueError("limit must be at least 1")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class Outcome:
    """What a command produced: data for json, lines for text, and an exit code."""

    def __init__(self, data, lines=None, code=EXIT_OK):
        self.data, self.lines, self.code = data, lines if lines is not None else [], code


def _names(M, xs):
    return [M.names[x] for x in sorted(xs)]


def _module_lines(M, title):
    out = [f"{title}: {M.n} elements"]
    if M.sigma is not None:
        out.append(f"  fixed: {', '.join(_names(M, M.fixed))}")
    for x in range(M.n):
        row = f"  {x}: {M.names[x]}"
        if M.sigma is not None and M.sigma[x] != x:
            row += f"  (sigma -> {M.names[M.sigma[x]]})"
        out.append(row)
    return out


def _as_inv(M):
    if M.sigma is None:
        raise BModError("this command needs an involutive module (a 'sigma' entry)")
    return M


# ------------------------------------------------------------------ commands

def cmd_validate(a, cfg):
    M = io.load_module(a.module)
    kind = "involutive module" if M.sigma is not None else "module"
    lines = [f"valid {kind} with {M.n} elements"]
    if M.sigma is not None:
        lines.append(f"fixed points: {len(M.fixed)}")
    return Outcome({"valid": True, "elements": M.n, "involutive": M.sigma is not None}, lines)


def cmd_hom(a, cfg):
    A, B = io.load_module(a.A), io.load_module(a.B)
    if a.inv:
        maps = S.hom(_as_inv(A), _as_inv(B), limit=cfg.limit)
    else:
        maps = L.hom_set(A.forget(), B.forget(), limit=cfg.limit)
    lines = [f"{len(maps)} morphisms"] + ["  " + " ".join(B.names[y] for y in f.map) for f in maps]
    return Outcome({"count": len(maps), "maps": [list(f.map) for f in maps]}, lines)


def cmd_dual(a, cfg):
    A = io.load_module(a.A)
    D = S.dual_inv(A) if A.sigma is not None else L.dual(A)
    return Outcome(io.module_to_dict(D, "dual"), _module_lines(D, "dual"))


def cmd_ker(a, cfg):
    f = io.load_morphism(a.morphism)
    K = S.kernel(f)
    members = sorted(K.members)
    return Outcome({"members": members, "names": _names(f.dom, members)},
                   [f"kernel: {len(members)} elements", "  " + ", ".join(_names(f.dom, members))])


def cmd_coker(a, cfg):
    f = io.load_morphism(a.morphism)
    C, q = S.cokernel(f)
    data = io.module_to_dict(C, "cokernel")
    data["map"] = list(q.map)
    lines = _module_lines(C, "cokernel") + ["map: " + " ".join(C.names[y] for y in q.map)]
    return Outcome(data, lines)


def cmd_normal_image(a, cfg):
    F = _as_inv(io.load_module(a.F))
    E = S.SubInv(F, io.parse_subset(a.E, F))
    N = S.normal_image(E)
    members = sorted(N.members)
    return Outcome({"members": members, "names": _names(F, members), "normal": S.is_normal(E)},
                   [f"normal image: {len(members)} elements", "  " + ", ".join(_names(F, members)),
                    f"input already normal: {S.is_normal(E)}"])


def cmd_nsb(a, cfg):
    E = _as_inv(io.load_module(a.E))
    lat = S.nsb(E, limit=cfg.limit)
    w = lat.modularity_witness()
    wl = None if w is None else [_names(E, s) for s in w]
    lines = [f"{len(lat)} normal subobjects", f"modular: {w is None}"]
    if wl:
        lines.append(f"witness (a <= c, a + (b ^ c) != (a + b) ^ c): {wl}")
    return Outcome({"count": len(lat), "modular": w is None, "witness": wl,
                    "members": [_names(E, s) for s in lat.elements]}, lines)


def cmd_radical(a, cfg):
    A = io.load_module(a.A)
    C = L.radical(A.forget())
    classes = [[A.names[x] for x in c] for c in C.classes()]
    return Outcome({"classes": classes, "trivial": L.radical_trivial(A.forget())},
                   [f"{len(classes)} classes"] + ["  {" + ", ".join(c) + "}" for c in classes])


def cmd_support(a, cfg):
    f = io.load_morphism(a.morphism)
    inv = f.dom.sigma is not None and f.cod.sigma is not None
    sd = S.inv_support_decomposition(f) if inv else L.support_decomposition(f)
    sup = _names(f.dom, sd.support)
    data = {"support": sup, "adjoint": list(sd.adjoint_g)}
    lines = [f"support: {', '.join(sup)}",
             "adjoint: " + " ".join(f.dom.names[y] for y in sd.adjoint_g)]
    if inv:
        k = _names(f.dom, S.support_orthogonal(f).members)
        data["kernel"] = k
        lines.append(f"kernel (orthogonal of the support): {', '.join(k)}")
    return Outcome(data, lines)


def cmd_sdes_validate(a, cfg):
    p = Path(a.sequence)
    d = json.loads(p.read_text())
    f1 = io.morphism_from_dict(d["aprime"], p.parent)
    f2 = io.morphism_from_dict(d["adoubleprime"], p.parent)
    _, rep = H.validate_sdes(f1, f2)
    return Outcome(rep._asdict(), [f"{k}: {v}" for k, v in rep._asdict().items()],
                   EXIT_OK if all(rep) else EXIT_FAIL)


def cmd_satellite(a, cfg):
    seq = io.load_sequence(a.sequence)
    Q = _as_inv(io.load_module(a.hom))
    F = H.HomFunctor(Q, limit=cfg.limit)
    res = H.satellite_eval(F, seq.left, seq)
    V = res.value
    lines = [f"SF(A') = Coker(F(a'')): {V.n} elements, {len(V.fixed)} null",
             f"non-null: {not V.is_null()}",
             f"endomorphisms acting: {len(res.functorial_actions)}"]
    return Outcome({"elements": V.n, "null_elements": len(V.fixed), "null": V.is_null(),
                    "module": io.module_to_dict(V, "satellite")}, lines)


def _reports_outcome(reports):
    ok = all(r.ok for r in reports)
    lines = [ln for r in reports for ln in r.lines()]
    total = sum(len(r.claims) for r in reports)
    bad = sum(len(r.failures) for r in reports)
    lines.append(f"{total - bad}/{total} claims reproduced")
    return Outcome({"ok": ok, "reports": [r.as_dict() for r in reports]}, lines,
                   EXIT_OK if ok else EXIT_FAIL)


def cmd_example(a, cfg):
    from . import catalog as C
    r = {"diagonal": C.diagonal_example, "s3": C.s3_example}[a.name]()
    return _reports_outcome([r])


def cmd_paper_check(a, cfg):
    from . import catalog as C
    return _reports_outcome(C.paper_check())


def cmd_dot(a, cfg):
    A = io.load_module(a.A)
    text = io.to_dot(A, Path(str(a.A)).stem)
    if a.output and a.output != "-":
        Path(a.output).write_text(text)
        return Outcome({"nodes": A.n, "edges": len(A.covers), "file": a.output},
                       [f"wrote {a.output}: {A.n} nodes, {len(A.covers)} edges"])
    return Outcome({"dot": text}, [text.rstrip("\n")])


def cmd_sweep(a, cfg):
    """Seeded spot checks of basic laws on random modules."""
    rng = np.random.default_rng(cfg.seed)
    fails = []
    for i in range(a.count):
        size = int(rng.integers(2, a.max_size + 1))
        M = L.random_module(rng, size)
        N = L.random_module(rng, int(rng.integers(2, a.max_size + 1)))
        hs = L.hom_set(M, N, limit=cfg.limit)
        f = hs[int(rng.integers(len(hs)))]
        g = L.galois_adjoint(f)
        fgf = all(f.map[g[f.map[x]]] == f.map[x] for x in range(M.n))
        gfg = all(g[f.map[g[y]]] == g[y] for y in range(N.n))
        dd = L.is_isomorphic(L.dual(L.dual(M)), M)
        if not (fgf and gfg and dd):
            fails.append({"case": i, "sizes": [M.n, N.n], "map": list(f.map)})
    lines = [f"{a.count} random cases (seed {cfg.seed}), {len(fails)} failures"]
    return Outcome({"cases": a.count, "seed": cfg.seed, "failures": fails}, lines,
                   EXIT_OK if not fails else EXIT_FAIL)


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bmodkit", description="Exact computation with finite B-modules.")
    p.add_argument("--limit", type=int, default=L.DEFAULT_LIMIT, help="search cap (states)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--seed", type=int, default=0)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(fn=fn)
        return sp

    add("validate", cmd_validate, "check the module laws").add_argument("module")
    sp = add("hom", cmd_hom, "enumerate morphisms A -> B")
    sp.add_argument("A")
    sp.add_argument("B")
    sp.add_argument("--inv", action="store_true", help="only involution-preserving maps")
    add("dual", cmd_dual, "dual module").add_argument("A")
    add("ker", cmd_ker, "kernel of an involutive morphism").add_argument("morphism")
    add("coker", cmd_coker, "cokernel of an involutive morphism").add_argument("morphism")
    sp = add("normal-image", cmd_normal_image, "smallest kernel containing a subset")
    sp.add_argument("E", help="comma list of elements or a JSON file with 'members'")
    sp.add_argument("F")
    add("nsb", cmd_nsb, "lattice of normal subobjects").add_argument("E")
    add("radical", cmd_radical, "radical congruence").add_argument("A")
    add("support", cmd_support, "support decomposition of a morphism").add_argument("morphism")
    add("sdes-validate", cmd_sdes_validate, "check a kernel-cokernel pair").add_argument("sequence")
    sp = add("satellite", cmd_satellite, "first satellite of Hom(Q, -)")
    sp.add_argument("sequence")
    sp.add_argument("--hom", required=True, metavar="Q")
    add("example", cmd_example, "replay a worked example").add_argument("name", choices=["diagonal", "s3"])
    add("paper-check", cmd_paper_check, "replay every worked example and counterexample")
    sp = add("dot", cmd_dot, "Hasse diagram in DOT")
    sp.add_argument("A")
    sp.add_argument("-o", "--output", default="-")
    sp = add("sweep", cmd_sweep, "seeded random spot checks")
    sp.add_argument("--count", type=int, default=50)
    sp.add_argument("--max-size", type=int, default=5)
    return p


def _emit(out: Outcome, cfg: CliConfig, stream) -> None:
    if cfg.format == "json":
        stream.write(json.dumps(out.data, indent=2, sort_keys=True, ensure_ascii=False) + "\n")
    else:
        for ln in out.lines:
            stream.write(ln + "\n")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        a = build_parser().parse_args(argv)
        if a.command is None:
            raise UsageError("a command is required")
        cfg = CliConfig(a.limit, a.format, a.seed)
    except (UsageError, ValueError) as exc:
        stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    try:
        out = a.fn(a, cfg)
    except LimitExceeded as exc:
        stderr.write(f"limit exceeded: {exc}\n")
        return EXIT_LIMIT
    except LawViolation as exc:
        stderr.write(f"invalid: {exc} (witness {list(exc.witness)})\n")
        return EXIT_FAIL
    except (NotKernel, NotCokernel) as exc:
        stderr.write(f"invalid: {exc} (witness {exc.witness})\n")
        return EXIT_FAIL
    except ConditionAFailed as exc:
        stderr.write(f"condition (a) fails: {exc}\n")
        return EXIT_FAIL
    except BModError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_FAIL
    except (FileNotFoundError, KeyError, json.JSONDecodeError) as exc:
        stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    _emit(out, cfg, stdout)
    return out.code


def main() -> None:
    sys.exit(run())
