"""Command-line entry point.

Exit status is 0 on success, 1 on domain errors (non-commuting generators
where a code is required, invalid maps, capacity) and 2 on I/O or parse
errors.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import analysis, construct, oracle
from .codefile import ParseError, dump, load, load_code
from .decompose import decompose
from .pauli import commutator_matrix, render


def _indices(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_params(args) -> str:
    code = load_code(args.file)
    p = analysis.params(code, args.distance_cap)
    out = f"n={p.n} moduli={','.join(map(str, p.moduli))} |S|={p.group_order} K={p.K}\n"
    if p.distance is not None:
        out += f"d={p.distance} witness={render(p.witness)}\n"
    elif args.distance_cap:
        out += f"d>{args.distance_cap}\n"
    return out


def cmd_distance(args) -> str:
    code = load_code(args.file)
    found = analysis.distance_witness(code, args.distance_cap)
    if found is None:
        return f"d>{args.distance_cap}\n"
    return f"d={found.distance} witness={render(found.witness)}\n"


def cmd_decompose(args) -> str:
    device, gens = load(args.file)
    r = decompose(gens, device)
    lines = [f"l={len(r.isotropic)} c={len(r.pairs)}"]
    lines += [f"W {render(w)}" for w in r.isotropic]
    for u, v, d in r.pairs:
        lines += [f"pair d={d}", f"U {render(u)}", f"V {render(v)}"]
    return "\n".join(lines) + "\n"


def cmd_commutes(args) -> str:
    device, gens = load(args.file)
    m = commutator_matrix(gens)
    return "".join(" ".join(str(x) for x in row) + "\n" for row in m)


def cmd_resolve(args) -> str:
    device, gens = load(args.file)
    return dump(construct.resolve(gens, device))


def cmd_scan(args) -> str:
    c1 = load_code(args.file1)
    c2 = load_code(args.file2)
    return dump(construct.scan(c1, c2, args.map1, args.map2))


def cmd_embed(args) -> str:
    return dump(construct.embed_scale(load_code(args.file), args.modulus))


def cmd_split(args) -> str:
    return dump(analysis.split_coprime(load_code(args.file)))


def cmd_oracle(args) -> str:
    code = load_code(args.file)
    pi = oracle.projector(code)
    tr = np.trace(pi)
    lines = [f"trace={tr.real:.12f}"]
    if args.check_projector:
        residual = np.max(np.abs(pi @ pi - pi))
        herm = np.max(np.abs(pi - pi.conj().T))
        lines.append(f"idempotence_residual={residual:.3e} hermiticity_residual={herm:.3e}")
    if args.codeword is not None:
        vec = oracle.codeword(code, args.codeword)
        for i in np.nonzero(np.abs(vec) > oracle.TOL)[0]:
            digits = "".join(map(str, oracle.basis_digits(code.device, int(i))))
            lines.append(f"|{digits}> {vec[i].real:.12f} {vec[i].imag:.12f}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mixedreg", description="Mixed-register stabilizer code tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("params", cmd_params, "group order, K and (optionally) distance")
    p.add_argument("file")
    p.add_argument("--distance-cap", type=int, default=3)

    p = add("distance", cmd_distance, "brute-force distance with a witness")
    p.add_argument("file")
    p.add_argument("--distance-cap", type=int, default=3)

    p = add("decompose", cmd_decompose, "isotropic generators and hyperbolic pairs")
    p.add_argument("file")

    p = add("commutes", cmd_commutes, "matrix of symplectic products")
    p.add_argument("file")

    for name, func, help_text in [
        ("resolve", cmd_resolve, "append registers to resolve non-commutativity"),
        ("split", cmd_split, "rewrite a code on coprime blocks with block-supported generators"),
    ]:
        p = add(name, func, help_text)
        p.add_argument("file")
        p.add_argument("-o", dest="output")

    p = add("scan", cmd_scan, "join two coprime codes on shared registers")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--map1", type=_indices, required=True)
    p.add_argument("--map2", type=_indices, required=True)
    p.add_argument("-o", dest="output")

    p = add("embed", cmd_embed, "scale a uniform code into larger registers")
    p.add_argument("file")
    p.add_argument("--modulus", type=int, required=True)
    p.add_argument("-o", dest="output")

    p = add("oracle", cmd_oracle, "dense projector checks and codewords")
    p.add_argument("file")
    p.add_argument("--codeword", type=_indices)
    p.add_argument("--check-projector", action="store_true")
    return parser


def run(argv: list[str] | None = None) -> tuple[int, str]:
    """Run one command; returns ``(exit_status, report)``.

    With ``-o`` the result is written to the file and the report is empty.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    try:
        text = args.func(args)
        output = getattr(args, "output", None)
        if output:
            _emit(text, output)
            text = ""
    except (ParseError, OSError) as exc:
        return 2, f"error: {exc}\n"
    except ValueError as exc:
        return 1, f"error: {exc}\n"
    return 0, text


def main(argv: list[str] | None = None) -> int:
    status, text = run(argv)
    (sys.stdout if status == 0 else sys.stderr).write(text)
    return status
