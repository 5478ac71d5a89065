"""Four covariants of the binary sextic, built by composing transvectants.

    theta_2_4  = (G, G)_4
    theta_3_2  = (G, theta_2_4)_4
    theta_8_2  = (theta_2_4, theta_3_2^2)_3
    theta_15_0 = ((G, theta_2_4)_1, theta_3_2^4)_8

theta_15_0 vanishes exactly on sextics in involution; on such a sextic
theta_8_2 is (a multiple of) the centre, unless the sextic has several
centres, in which case it vanishes identically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .binary_forms import BinaryForm, transvectant
from .conic_plane import PlanePoint


class NotInvolutiveError(ValueError):
    pass


@dataclass(frozen=True)
class CovariantValue:
    degree: int
    order: int
    form: BinaryForm

    def __post_init__(self):
        if self.form.order != self.order:
            raise ValueError(f"covariant of order {self.order} got a form of order {self.form.order}")

    @property
    def coeffs(self) -> tuple:
        return self.form.coeffs

    def is_zero(self) -> bool:
        return self.form.is_zero()


def _check_sextic(G: BinaryForm) -> None:
    if G.order != 6:
        raise ValueError(f"expected a sextic, got order {G.order}")


def theta_2_4(G: BinaryForm) -> CovariantValue:
    _check_sextic(G)
    return CovariantValue(2, 4, transvectant(G, G, 4))


def theta_3_2(G: BinaryForm, t24: CovariantValue | None = None) -> CovariantValue:
    t24 = t24 or theta_2_4(G)
    return CovariantValue(3, 2, transvectant(G, t24.form, 4))


def theta_8_2(G: BinaryForm) -> CovariantValue:
    t24 = theta_2_4(G)
    t32 = theta_3_2(G, t24)
    return CovariantValue(8, 2, transvectant(t24.form, t32.form ** 2, 3))


def theta_15_0(G: BinaryForm) -> CovariantValue:
    t24 = theta_2_4(G)
    t32 = theta_3_2(G, t24)
    return CovariantValue(15, 0, transvectant(transvectant(G, t24.form, 1), t32.form ** 4, 8))


def all_covariants(G: BinaryForm) -> dict[str, CovariantValue]:
    return {
        "theta_2_4": theta_2_4(G),
        "theta_3_2": theta_3_2(G),
        "theta_8_2": theta_8_2(G),
        "theta_15_0": theta_15_0(G),
    }


def is_involutive(G: BinaryForm) -> bool:
    return theta_15_0(G).coeffs[0] == 0


def involution_centre(G: BinaryForm) -> PlanePoint | None:
    if not is_involutive(G):
        raise NotInvolutiveError("sextic is not in involution")
    t82 = theta_8_2(G)
    if t82.is_zero():
        return None
    return PlanePoint.of(t82.form)


def invariant_value(G: BinaryForm) -> Any:
    return theta_15_0(G).coeffs[0]
