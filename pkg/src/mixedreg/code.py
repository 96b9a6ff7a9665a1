"""The stabilizer-code container and the package's exception types."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .pauli import Device, PauliVec, symp


class InvalidCodeError(ValueError):
    """Generators that were required to commute do not."""


class CapacityError(ValueError):
    """A dense operation would exceed the oracle's dimension cap."""


class ConsistencyError(RuntimeError):
    """A numerical cross-check failed (e.g. a projector trace far from an integer)."""


@dataclass(frozen=True)
class StabilizerCode:
    """A device and a list of generators.

    Commutation is checked on construction unless ``check=False``; the
    unchecked form is only used internally to carry raw generator sets.
    """

    device: Device
    generators: tuple[PauliVec, ...]

    def __init__(self, device: Device | Iterable[int], generators: Iterable[PauliVec] = (), check: bool = True):
        if not isinstance(device, Device):
            device = Device(device)
        gens = tuple(generators)
        for g in gens:
            if g.device != device:
                raise ValueError(f"generator {g!r} does not live on {device}")
        object.__setattr__(self, "device", device)
        object.__setattr__(self, "generators", gens)
        if check:
            self.validate()

    def validate(self) -> None:
        gens = self.generators
        for i, a in enumerate(gens):
            for b in gens[i + 1:]:
                if symp(a, b) != 0:
                    raise InvalidCodeError(f"generators {a} and {b} do not commute (product {symp(a, b)})")

    @property
    def n(self) -> int:
        return self.device.n

    def __len__(self) -> int:
        return len(self.generators)
