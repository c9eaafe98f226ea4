"""Exact eigenvalues of the Cayley graphs built on the generator sets.

The graphs are abelian Cayley graphs on G = F_q x F_q, so the characters
of G diagonalize the adjacency operator: for a character indexed by
alpha, the eigenvalue is a sum of 2n p-th roots of unity whose exponents
are integer pairings <alpha, beta> over the members beta of H.  Each
eigenvalue is kept with its exact exponent-count vector; the float value
is the fold of that vector through cos(2*pi*j/p), so all real-ness and
bound checks run against exactly counted data.

The pairing depends on the family:

* plus:  <alpha, beta> = trace_to_prime(2 * xpart(alpha * beta)) in the
  quadratic extension (the additive character composed with rel_trace of
  the product against the conjugate-symmetric form);
* minus: <(a, b), (x, y)> = trace(a*x + b*y) componentwise.

For the plus family every nontrivial eigenvalue equals the negated
Kloosterman sum -K(1, norm(alpha)), which pins the Ramanujan bound
2*sqrt(q) = 2*sqrt(degree - 1); the minus family obeys the slightly
weaker bound 2*sqrt(q) = 2*sqrt(degree + 1).
"""

import math
from dataclasses import dataclass

import numpy as np

from .curves import MINUS, PLUS, GeneratorSet
from .fields import SizeCapError, unity_cos_sin

DEFAULT_SPECTRUM_BUDGET = 1 << 20
BOUND_TOL = 1e-9

RAMANUJAN = "Ramanujan"
ALMOST_RAMANUJAN = "AlmostRamanujan"
NEITHER_BOUND = "Neither"


def _pairing_exponent(gen: GeneratorSet, alpha: int, beta: int) -> int:
    if gen.family == PLUS:
        prod = gen.ext.mul(alpha, beta)
        return gen.base.trace(gen.ext.rel_trace(prod))
    a, b = gen.split(alpha)
    x, y = gen.split(beta)
    return gen.base.trace(gen.base.add(gen.base.mul(a, x), gen.base.mul(b, y)))


def character_counts(gen: GeneratorSet, alpha: int) -> np.ndarray:
    """Exact exponent counts: counts[j] = #{beta in H : <alpha,beta> = j}."""
    counts = np.zeros(gen.p, dtype=np.int64)
    for beta in gen.members:
        counts[_pairing_exponent(gen, alpha, beta)] += 1
    return counts


def eigenvalue(gen: GeneratorSet, alpha: int) -> float:
    """The Cayley eigenvalue at character alpha (always real: H = -H)."""
    counts = character_counts(gen, alpha)
    cos, sin = unity_cos_sin(gen.p)
    im = float(counts @ sin)
    assert abs(im) <= BOUND_TOL, f"eigenvalue not real at alpha={alpha}"
    return float(counts @ cos)


@dataclass(frozen=True)
class SpectrumReport:
    generator: GeneratorSet
    eigenvalues: np.ndarray   # float64, index = character alpha
    counts: np.ndarray        # int64, shape (size, p)
    max_nontrivial_abs: float
    ramanujan_bound: float
    almost_bound: float
    classification: str
    connected: bool

    @property
    def degree(self) -> int:
        return self.generator.degree

    def histogram(self) -> dict:
        """Multiplicities of the eigenvalues rounded to nearest 1e-6."""
        vals, cnts = np.unique(np.round(self.eigenvalues, 6), return_counts=True)
        return {float(v): int(c) for v, c in zip(vals, cnts)}

    def to_json_dict(self) -> dict:
        return {
            "family": self.generator.family,
            "context": (self.generator.ext or self.generator.base).to_json_dict(),
            "degree": self.degree,
            "vertices": self.generator.ambient_size,
            "max_nontrivial_abs": self.max_nontrivial_abs,
            "ramanujan_bound": self.ramanujan_bound,
            "almost_ramanujan_bound": self.almost_bound,
            "classification": self.classification,
            "connected": self.connected,
            "histogram": {f"{v:.6f}": c for v, c in sorted(self.histogram().items())},
        }


def full_spectrum(gen: GeneratorSet,
                  budget: int = DEFAULT_SPECTRUM_BUDGET) -> SpectrumReport:
    """All q^2 eigenvalues with exact counts, plus bound classification.

    Vectorized over characters: for each member beta the pairing exponent
    is evaluated on every alpha at once through the context's table
    arithmetic.  Refuses vertex counts above ``budget``.
    """
    size = gen.ambient_size
    if size > budget:
        raise SizeCapError(f"{size} vertices exceed spectrum budget {budget}")
    ctx = gen.base
    q, p = ctx.q, gen.p
    idx = np.arange(size)
    ax, ay = idx % q, idx // q

    counts = np.zeros((size, p), dtype=np.int64)
    for beta in gen.members:
        bx, by = gen.split(beta)
        if gen.family == PLUS:
            # xpart(alpha * beta) = ax*bx + delta*ay*by, doubled, then traced
            t1 = ctx.mul_array(ax, bx)
            t2 = ctx.mul_array(ay, ctx.mul(gen.ext.delta, by))
            xp = ctx.add_array(t1, t2)
            expo = ctx.trace_table[ctx.add_array(xp, xp)]
        else:
            expo = ctx.trace_table[
                ctx.add_array(ctx.mul_array(ax, bx), ctx.mul_array(ay, by))]
        counts[idx, expo] += 1

    cos, sin = unity_cos_sin(p)
    eigs = counts @ cos
    assert np.abs(counts @ sin).max() <= BOUND_TOL, "spectrum not real"
    assert abs(eigs[0] - gen.degree) <= BOUND_TOL, "trivial eigenvalue wrong"

    max_nt = float(np.abs(eigs[1:]).max())
    ram = 2.0 * math.sqrt(gen.degree - 1)
    almost = 2.0 * math.sqrt(gen.degree + 1)
    if max_nt <= ram + BOUND_TOL:
        cls = RAMANUJAN
    elif max_nt <= almost + BOUND_TOL:
        cls = ALMOST_RAMANUJAN
    else:
        cls = NEITHER_BOUND
    connected = not np.any(np.abs(eigs[1:] - gen.degree) <= BOUND_TOL)
    return SpectrumReport(gen, eigs, counts, max_nt, ram, almost, cls, connected)


def adjacency_matrix(gen: GeneratorSet) -> np.ndarray:
    """Dense 0/1 adjacency matrix of the Cayley graph (oracle-sized inputs)."""
    size = gen.ambient_size
    if size > 1 << 14:
        raise SizeCapError(f"{size} vertices is too large for a dense matrix")
    mat = np.zeros((size, size), dtype=np.int8)
    for v in range(size):
        for h in gen.members:
            mat[v, gen.add(v, h)] = 1
    return mat
