"""The Ha-Kye family of 9x9 phase-coupled witnesses on C^3 (x) C^3.

W[a, b, c; theta] has diagonal (a, c, b, b, a, c, c, b, a) and six unit
couplings among the "corner" rows {0, 4, 8}: entries (0,4), (4,8), (8,0)
hold -e^{i theta} and entries (0,8), (4,0), (8,4) hold -e^{-i theta}.  The
coupled rows form a 3x3 circulant block, so the full spectrum has the
closed form

    {a - 2 cos(theta + 2 pi k / 3) : k = 0, 1, 2}  union  {b, b, b, c, c, c}.

Under partial transposition of the second factor the couplings migrate to
three decoupled 2x2 blocks at index pairs (1,3), (2,6), (5,7), each with
diagonal {b, c} and unit off-diagonal magnitude, giving

    three copies each of (b+c)/2 +- sqrt(((b-c)/2)^2 + 1),  plus {a, a, a}.

Both closed forms are exposed as oracles so eigensolver output can be
checked against algebra that never touches the dense matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParams
from .operators import Dims, HermitianOperator

HAKYE_DIMS = Dims(3, 3)

_DIAGONAL_PATTERN = ("a", "c", "b", "b", "a", "c", "c", "b", "a")
_FORWARD_COUPLINGS = ((0, 4), (4, 8), (8, 0))


@dataclass(frozen=True)
class HaKyeParams:
    """Diagonal weights a, b, c >= 0 (not all zero) and coupling phase theta."""

    a: float
    b: float
    c: float
    theta: float

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "theta"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise InvalidParams(f"{name} must be finite, got {value!r}")
        if self.a < 0.0 or self.b < 0.0 or self.c < 0.0:
            raise InvalidParams(
                f"diagonal weights must be non-negative, got "
                f"a={self.a!r}, b={self.b!r}, c={self.c!r}"
            )
        if self.a == 0.0 and self.b == 0.0 and self.c == 0.0:
            raise InvalidParams("at least one of a, b, c must be positive")


def hakye_witness(params: HaKyeParams) -> HermitianOperator:
    """Assemble the dense 9x9 Ha-Kye matrix for the given parameters."""
    values = {"a": params.a, "b": params.b, "c": params.c}
    m = np.zeros((9, 9), dtype=np.complex128)
    for idx, key in enumerate(_DIAGONAL_PATTERN):
        m[idx, idx] = values[key]
    coupling = -np.exp(1j * params.theta)
    for r, s in _FORWARD_COUPLINGS:
        m[r, s] = coupling
        m[s, r] = np.conj(coupling)
    return HermitianOperator(HAKYE_DIMS, m)


def hakye_spectrum_closed_form(params: HaKyeParams) -> np.ndarray:
    """Sorted eigenvalue multiset of the witness, from the circulant block."""
    circulant = [
        params.a - 2.0 * math.cos(params.theta + 2.0 * math.pi * k / 3.0)
        for k in range(3)
    ]
    return np.sort(np.array(circulant + [params.b] * 3 + [params.c] * 3))


def hakye_pt_spectrum_closed_form(params: HaKyeParams) -> np.ndarray:
    """Sorted eigenvalue multiset of the partial transpose, from 2x2 blocks."""
    mid = (params.b + params.c) / 2.0
    radius = math.hypot((params.b - params.c) / 2.0, 1.0)
    return np.sort(np.array([mid - radius, mid + radius] * 3 + [params.a] * 3))


def reference_violation_params(theta: float = math.pi / 12.0) -> HaKyeParams:
    """The family slice a = (4/3) cos(theta), b = (2/3) cos(theta), c = 0.

    At the default theta = pi/12 this is the standard instance whose SPA
    fails the partial-transpose test: the witness and its partial transpose
    have bottom eigenvalues near -0.6440 and -0.7286 respectively.
    """
    ct = math.cos(theta)
    return HaKyeParams(a=4.0 * ct / 3.0, b=2.0 * ct / 3.0, c=0.0, theta=theta)
