"""Named fields, instance families and seeded random generators."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath

from .errors import GenerationFailed, IndeterminateError, InputError, SingularRightBlock
from .linalg import RationalMatrix, rank_bareiss, solve
from .numberfield import FieldElement, NumberField, embed, field_new
from .torus import PeriodMatrix, period_matrix_new, unimodular_transform

FIELD_PRESETS: dict[str, tuple[list[int], tuple[str, str]]] = {
    "gaussian": ([1, 0, 1], ("0", "1")),
    "eisenstein": ([1, 1, 1], ("-0.5", "0.8660")),
    "sqrt-2": ([2, 0, 1], ("0", "1.4142")),
    "cubic": ([-1, -1, 0, 1], ("-0.6624", "0.5623")),
    "cbrt2": ([-2, 0, 0, 1], ("-0.63", "1.0911")),
    "zeta8": ([1, 0, 0, 0, 1], ("0.7071", "0.7071")),
    "zeta5": ([1, 1, 1, 1, 1], ("0.3090", "0.9511")),
    "i-fourth-root-2": ([-2, 0, 0, 0, 1], ("0", "1.1892")),
}


def preset_field(name: str, max_precision: int = 4096) -> NumberField:
    try:
        poly, hint = FIELD_PRESETS[name]
    except KeyError:
        raise InputError(f"unknown field preset {name!r}; choose from {sorted(FIELD_PRESETS)}") from None
    return _cached_field(tuple(poly), hint, max_precision)


_FIELD_CACHE: dict = {}


def _cached_field(poly: tuple, hint: tuple, max_precision: int) -> NumberField:
    key = (poly, hint, max_precision)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = field_new(list(poly), hint, max_precision=max_precision)
    return _FIELD_CACHE[key]


def diagonal(field: NumberField, entries: Sequence[FieldElement]) -> PeriodMatrix:
    g = len(entries)
    return period_matrix_new(field, [[entries[i] if i == j else field.zero() for j in range(g)] for i in range(g)])


# --- the named families ------------------------------------------------------------

def cm_power(d: int, g: int) -> PeriodMatrix:
    """E^g with E = C / <1, w>, w generating the ring of integers of Q(sqrt d), d < 0 squarefree."""
    if d >= 0 or any(d % (p * p) == 0 for p in range(2, int(abs(d) ** 0.5) + 1)):
        raise InputError("d must be a negative squarefree integer")
    hint = (str(0), mpmath.nstr(mpmath.sqrt(-d), 20))
    K = _cached_field((-d, 0, 1), hint, 4096)
    w = K.gen() if d % 4 in (2, 3) else (K.one() + K.gen()) * Fraction(1, 2)
    return diagonal(K, [w] * g)


def noncm_cubic_power(g: int) -> PeriodMatrix:
    K = preset_field("cubic")
    return diagonal(K, [K.gen()] * g)


def cm_pair() -> PeriodMatrix:
    """E_1 x E_2 with periods zeta^2 = i and zeta + zeta^3 = i sqrt 2, zeta^4 = -1."""
    K = preset_field("zeta8")
    z = K.gen()
    return diagonal(K, [z * z, z + z**3])


@dataclass(frozen=True)
class TensorField:
    field: NumberField
    generators: tuple[FieldElement, ...]


def tensor_field(components: Sequence[tuple[Sequence[int], tuple[str, str]]], weights: Sequence[int]) -> TensorField:
    """Q(x_1, ..., x_m) presented by theta = sum w_r x_r, plus the images of the x_r.

    Each component is (monic integral minpoly, root hint).  The tensor product of
    the component fields is built explicitly; theta must generate it, which
    holds exactly when the resulting minimal polynomial is irreducible of full
    degree (checked by ``field_new``).
    """
    comps = [field_new(list(p), h) for p, h in components]
    for K in comps:
        if K.scale != 1:
            raise InputError("tensor components must be monic")
    degs = [K.degree for K in comps]
    N = 1
    for n in degs:
        N *= n

    def index(exps):
        i = 0
        for e, n in zip(exps, degs):
            i = i * n + e
        return i

    def exps_of(i):
        out = []
        for n in reversed(degs):
            out.append(i % n)
            i //= n
        return list(reversed(out))

    def mul_gen(v, r):
        out = [Fraction(0)] * N
        n = degs[r]
        low = [-Fraction(c) for c in comps[r].minpoly[:-1]]
        for i, c in enumerate(v):
            if not c:
                continue
            e = exps_of(i)
            if e[r] + 1 < n:
                e[r] += 1
                out[index(e)] += c
            else:
                for k, a in enumerate(low):
                    if a:
                        e2 = list(e)
                        e2[r] = k
                        out[index(e2)] += c * a
        return out

    powers = [[Fraction(int(i == 0)) for i in range(N)]]
    for _ in range(N):
        v = powers[-1]
        nxt = [Fraction(0)] * N
        for r, w in enumerate(weights):
            if w:
                nxt = [a + w * b for a, b in zip(nxt, mul_gen(v, r))]
        powers.append(nxt)
    V = RationalMatrix.from_rows([[powers[k][i] for k in range(N)] for i in range(N)], N)
    if rank_bareiss(V) != N:
        raise GenerationFailed("weights do not give a primitive element")
    gens_vec = []
    for r in range(len(comps)):
        e = [0] * len(comps)
        if degs[r] > 1:
            e[r] = 1
            vec = [Fraction(int(i == index(e))) for i in range(N)]
        else:
            vec = [Fraction(int(i == 0)) * -comps[r].minpoly[0] for i in range(N)]
        gens_vec.append(vec)
    sol = solve(V, [powers[N]] + gens_vec)
    minpoly = [-int(c) for c in sol[0]] + [1]
    with mpmath.workprec(200):
        h = sum(
            (w * mpmath.mpc(complex(embed(K.gen(), 128))) for w, K in zip(weights, comps)),
            mpmath.mpc(0),
        )
    hint = (mpmath.nstr(h.real, 15), mpmath.nstr(h.imag, 15))
    F = field_new(minpoly, hint)
    images = tuple(F.element(s) for s in sol[1:])
    for img, K in zip(images, comps):
        if abs(complex(img) - complex(embed(K.gen(), 64))) > 1e-9:
            raise GenerationFailed("tensor generator images do not match the component embeddings")
    return TensorField(F, images)


def rho_zero() -> PeriodMatrix:
    """tau = i [[1, sqrt 2], [sqrt 3, sqrt 5]] inside Q(i, sqrt 2, sqrt 3, sqrt 5), degree 16."""
    T = tensor_field(
        [
            ([1, 0, 1], ("0", "1")),
            ([-2, 0, 1], ("1.41421356237", "0")),
            ([-3, 0, 1], ("1.73205080757", "0")),
            ([-5, 0, 1], ("2.2360679775", "0")),
        ],
        [1, 1, 1, 1],
    )
    i, r2, r3, r5 = T.generators
    return period_matrix_new(T.field, [[i, i * r2], [i * r3, i * r5]])


# --- random generators ---------------------------------------------------------------

def random_element(K: NumberField, rng: random.Random, bound: int = 3) -> FieldElement:
    return K.element(Fraction(rng.randint(-bound, bound), rng.choice((1, 1, 1, 2))) for _ in range(K.degree))


def random_period_matrix(K: NumberField, g: int, seed: int, bound: int = 3, tries: int = 100) -> PeriodMatrix:
    rng = random.Random(seed)
    for _ in range(tries):
        tau = [[random_element(K, rng, bound) for _ in range(g)] for _ in range(g)]
        try:
            return period_matrix_new(K, tau, 64, 256)
        except IndeterminateError:
            continue
    raise GenerationFailed(f"no valid tau after {tries} draws")


def random_unimodular(n: int, rng: random.Random, steps: int | None = None) -> list[list[int]]:
    """Product of random elementary row additions, swaps and sign flips."""
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps if steps is not None else n + 2):
        kind = rng.random()
        i, j = rng.sample(range(n), 2)
        if kind < 0.7:
            m = rng.choice((-1, 1))
            M[i] = [a + m * b for a, b in zip(M[i], M[j])]
        elif kind < 0.85:
            M[i], M[j] = M[j], M[i]
        else:
            M[i] = [-a for a in M[i]]
    return M


def transformed(P: PeriodMatrix, seed: int, tries: int = 50) -> tuple[PeriodMatrix, list[list[int]]]:
    """An isomorphic presentation of P under a seeded random unimodular change of lattice basis."""
    rng = random.Random(seed)
    for _ in range(tries):
        M = random_unimodular(2 * P.g, rng)
        try:
            return unimodular_transform(P, M), M
        except SingularRightBlock:
            continue
    raise GenerationFailed(f"every unimodular draw hit a singular right block ({tries} tries)")
