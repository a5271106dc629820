"""The octic (T, N) and bioctic (X, Y, Z, W) recurrences mod M.

Each tuple holds the elementary symmetric functions of a set of conjugates
A_k that individually follow A_{k+1} = A_k^2 - 2.  The update rules below
are those symmetric functions rewritten in terms of the previous tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .modnum import Residue, SpecialForm, reduce_special
from .seeds import BiocticSeeds, OcticSeeds, SeedSet


@dataclass(frozen=True)
class OcticState:
    T: Residue
    N: Residue
    k: int = 0

    def as_tuple(self) -> tuple[int, int]:
        return (self.T.value, self.N.value)


@dataclass(frozen=True)
class BiocticState:
    X: Residue
    Y: Residue
    Z: Residue
    W: Residue
    k: int = 0

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.X.value, self.Y.value, self.Z.value, self.W.value)


State = Union[OcticState, BiocticState]


def octic_step_ints(T: int, N: int, m: SpecialForm) -> tuple[int, int]:
    T2 = reduce_special(T * T, m)
    T_next = T2 - 2 * N - 4
    N_next = reduce_special(N * N, m) - 2 * T2 + 4 * N + 4
    return reduce_special(T_next, m), reduce_special(N_next, m)


def bioctic_step_ints(X: int, Y: int, Z: int, W: int, m: SpecialForm) -> tuple[int, int, int, int]:
    X2 = reduce_special(X * X, m)
    Y2 = reduce_special(Y * Y, m)
    XZ = reduce_special(X * Z, m)
    X_next = X2 - 2 * Y - 8
    Y_next = Y2 - 2 * XZ + 2 * W - 6 * X2 + 12 * Y + 24
    Z_next = (
        reduce_special(Z * Z, m)
        - 2 * reduce_special(W * Y, m)
        - 4 * Y2 + 8 * XZ - 8 * W + 12 * X2 - 24 * Y - 32
    )
    W_next = (
        reduce_special(W * W, m)
        - 2 * reduce_special(Z * Z, m)
        + 4 * reduce_special(W * Y, m)
        + 4 * Y2 - 8 * XZ + 8 * W - 8 * X2 + 16 * Y + 16
    )
    return tuple(reduce_special(v, m) for v in (X_next, Y_next, Z_next, W_next))


def octic_state(T: int, N: int, m: SpecialForm, k: int = 0) -> OcticState:
    return OcticState(m.residue(T), m.residue(N), k)


def bioctic_state(X: int, Y: int, Z: int, W: int, m: SpecialForm, k: int = 0) -> BiocticState:
    return BiocticState(m.residue(X), m.residue(Y), m.residue(Z), m.residue(W), k)


def step_octic(s: OcticState) -> OcticState:
    m = s.T.modulus
    T, N = octic_step_ints(s.T.value, s.N.value, m)
    return OcticState(Residue(T, m), Residue(N, m), s.k + 1)


def step_bioctic(s: BiocticState) -> BiocticState:
    m = s.X.modulus
    vals = bioctic_step_ints(s.X.value, s.Y.value, s.Z.value, s.W.value, m)
    return BiocticState(*(Residue(v, m) for v in vals), s.k + 1)


def initial_state(seeds: SeedSet) -> State:
    if isinstance(seeds, OcticSeeds):
        return OcticState(seeds.T0, seeds.N0, 0)
    if isinstance(seeds, BiocticSeeds):
        return BiocticState(seeds.X0, seeds.Y0, seeds.Z0, seeds.W0, 0)
    raise TypeError(f"not a seed set: {seeds!r}")


def iterate(seeds: SeedSet | State, steps: int) -> State:
    """Apply the matching recurrence `steps` times."""
    if steps < 0:
        raise ValueError("steps must be non-negative")
    state = seeds if isinstance(seeds, (OcticState, BiocticState)) else initial_state(seeds)
    # the hot loop stays on plain ints
    if isinstance(state, OcticState):
        m = state.T.modulus
        T, N = state.T.value, state.N.value
        for _ in range(steps):
            T, N = octic_step_ints(T, N, m)
        return OcticState(Residue(T, m), Residue(N, m), state.k + steps)
    m = state.X.modulus
    vals = state.as_tuple()
    for _ in range(steps):
        vals = bioctic_step_ints(*vals, m)
    return BiocticState(*(Residue(v, m) for v in vals), state.k + steps)
