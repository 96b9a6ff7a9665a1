"""Plain-text code files.

::

    # comment
    moduli 2 6 3
    gen 1 3 0 / 0 0 0
    gen 0 2 1 / 0 0 0

The ``moduli`` line comes first; every ``gen`` line lists the ``n``
x-exponents, a ``/``, then the ``n`` z-exponents.  Commutation is not
checked here, so raw generator sets can be stored too.
"""

from __future__ import annotations

from collections.abc import Sequence

from .code import StabilizerCode
from .pauli import Device, PauliVec, render


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class RangeError(ParseError):
    """An exponent outside ``[0, Q_i)``."""


class FormatError(ParseError):
    """A bad ``moduli`` line."""


def parse(text: str) -> tuple[Device, list[PauliVec]]:
    device = None
    gens: list[PauliVec] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if head == "moduli":
            if device is not None:
                raise ParseError("duplicate moduli line", lineno)
            try:
                mods = [int(t) for t in rest.split()]
            except ValueError:
                raise FormatError("moduli must be integers", lineno) from None
            if not mods:
                raise FormatError("empty moduli line", lineno)
            if any(q < 2 for q in mods):
                raise FormatError("every modulus must be at least 2", lineno)
            device = Device(mods)
        elif head == "gen":
            if device is None:
                raise ParseError("gen line before the moduli line", lineno)
            if rest.count("/") != 1:
                raise ParseError("expected exactly one '/' in a gen line", lineno)
            left, right = rest.split("/")
            try:
                xs = [int(t) for t in left.split()]
                zs = [int(t) for t in right.split()]
            except ValueError:
                raise ParseError("exponents must be integers", lineno) from None
            if len(xs) != device.n or len(zs) != device.n:
                raise ParseError(f"expected {device.n} x and {device.n} z exponents", lineno)
            for q, a, b in zip(device.moduli, xs, zs):
                if not (0 <= a < q and 0 <= b < q):
                    raise RangeError(f"exponent out of range for modulus {q}", lineno)
            gens.append(PauliVec(device, xs, zs))
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)
    if device is None:
        raise ParseError("missing moduli line")
    return device, gens


def render_code(device: Device, gens: Sequence[PauliVec]) -> str:
    lines = ["moduli " + " ".join(map(str, device.moduli))]
    lines += ["gen " + render(g) for g in gens]
    return "\n".join(lines) + "\n"


def load(path: str) -> tuple[Device, list[PauliVec]]:
    with open(path) as fh:
        return parse(fh.read())


def load_code(path: str) -> StabilizerCode:
    """Read a file whose generators must commute."""
    device, gens = load(path)
    return StabilizerCode(device, gens)


def dump(code: StabilizerCode) -> str:
    return render_code(code.device, code.generators)
