"""Expansion complexity by null-space search, with a brute-force oracle.

The n-th expansion complexity of a sequence prefix is the least total degree
of a nonzero bivariate polynomial h with h(x, G(x)) = 0 mod x^n, where G is
the generating function of the prefix; it is 0 exactly when the prefix is
all zero.

The search works column by column: the coefficient vectors (mod x^n) of the
monomial substitutions x^i * G(x)^j, enumerated in the fixed order
(i+j, j, i), are fed into an incremental Gaussian elimination that tracks
how each column was reduced.  The first column that is linearly dependent on
its predecessors closes the search: its combination vector is a minimal
witness, and its total degree is E_n.  Processing the remainder of that
degree block yields the rank of the decisive n x M_d system, where
M_d = (d+1)(d+2)/2 counts the monomials of total degree <= d.

Elimination is done twice over: once generically over any field, and once
specialized to F_2 where columns and combinations live in machine integers.
Both paths follow the identical column order and therefore emit identical
witnesses; the tests pin this equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .field import Field
from .lincomp import Sequence
from .series import (
    BivariatePoly,
    TruncatedSeries,
    monomial_key,
    monomials_up_to,
    series_mul,
    substitute,
)

# Enumerating q^{M_d} candidate polynomials is the oracle's budget.
BRUTE_FORCE_CAP = 1 << 16


def monomial_count(d: int) -> int:
    """Number of bivariate monomials of total degree <= d."""
    return (d + 1) * (d + 2) // 2


def kernel_degree_bound(n: int) -> int:
    """Least d with (d+1)(d+2)/2 > n.

    More columns than rows force a dependency, so E_n never exceeds this.
    """
    d = 0
    while monomial_count(d) <= n:
        d += 1
    return d


@dataclass(frozen=True)
class ExpansionWitness:
    """E_n together with a minimal-degree certificate.

    poly is None exactly when complexity == 0 (all-zero prefix).
    matrix_rank / monomial_count describe the decisive linear system; they
    are None for witnesses found by brute-force enumeration.
    """

    n: int
    complexity: int
    poly: Optional[BivariatePoly]
    matrix_rank: Optional[int] = None
    monomial_count: Optional[int] = None


@dataclass(frozen=True)
class ExpansionProfile:
    values: tuple[int, ...]


def _columns_gf2(bits: int, n: int):
    """Yield (mono, column) in canonical order; columns are n-bit masks."""
    mask = (1 << n) - 1
    powers = [1]  # G^0 = 1
    d = 0
    while True:
        while len(powers) <= d:
            # carry-less multiply: G^{j+1} = G^j * G mod 2, truncated
            prev = powers[-1]
            acc = 0
            g = bits
            shift = 0
            while g:
                if g & 1:
                    acc ^= prev << shift
                g >>= 1
                shift += 1
            powers.append(acc & mask)
        for j in range(d + 1):
            i = d - j
            yield (i, j), (powers[j] << i) & mask
        d += 1


def _search_gf2(bits: int, n: int):
    """Kernel search over F_2 with integer-packed columns.

    Returns (e, combination, rank, monomials) where combination maps
    monomial index -> 1 for the kernel vector.
    """
    pivots: dict[int, tuple[int, int]] = {}
    stream = _columns_gf2(bits, n)
    cap = kernel_degree_bound(n)
    index = 0
    while True:
        mono, col = next(stream)
        comb = 1 << index
        found = None
        while col:
            row = (col & -col).bit_length() - 1
            hit = pivots.get(row)
            if hit is None:
                pivots[row] = (col, comb)
                break
            col ^= hit[0]
            comb ^= hit[1]
        else:
            found = comb
        if found is not None:
            degree = mono[0] + mono[1]
            # finish the degree block so the rank diagnostic covers the
            # whole decisive system
            remaining = monomial_count(degree) - index - 1
            for _ in range(remaining):
                _, col = next(stream)
                while col:
                    row = (col & -col).bit_length() - 1
                    hit = pivots.get(row)
                    if hit is None:
                        pivots[row] = (col, 0)
                        break
                    col ^= hit[0]
            combo = {
                t: 1 for t in range(index + 1) if (found >> t) & 1
            }
            return degree, combo, len(pivots), monomial_count(degree)
        index += 1
        if mono[0] + mono[1] > cap:
            raise RuntimeError("kernel search overran its counting bound")


def _columns_generic(field: Field, terms, n: int):
    g = TruncatedSeries(field, terms[:n])
    powers = [TruncatedSeries(field, [1] + [0] * (n - 1))]
    d = 0
    while True:
        while len(powers) <= d:
            powers.append(series_mul(powers[-1], g, n))
        for j in range(d + 1):
            i = d - j
            pj = powers[j].coeffs
            col = [0] * n
            for t in range(n - i):
                col[i + t] = pj[t]
            yield (i, j), col
        d += 1


def _search_generic(field: Field, terms, n: int):
    pivots: dict[int, tuple[list[int], dict[int, int]]] = {}
    stream = _columns_generic(field, terms, n)
    cap = kernel_degree_bound(n)
    index = 0
    while True:
        mono, col = next(stream)
        comb = {index: 1}
        found = True
        for row in range(n):
            v = col[row]
            if not v:
                continue
            hit = pivots.get(row)
            if hit is None:
                # normalize so the pivot entry is 1 and store
                inv = field.inv(v)
                ncol = [field.mul(inv, x) for x in col]
                ncomb = {t: field.mul(inv, x) for t, x in comb.items()}
                pivots[row] = (ncol, ncomb)
                found = False
                break
            pcol, pcomb = hit
            for r2 in range(row, n):
                if pcol[r2]:
                    col[r2] = field.sub(col[r2], field.mul(v, pcol[r2]))
            for t, x in pcomb.items():
                comb[t] = field.sub(comb.get(t, 0), field.mul(v, x))
        if found:
            degree = mono[0] + mono[1]
            remaining = monomial_count(degree) - index - 1
            for _ in range(remaining):
                _, col = next(stream)
                for row in range(n):
                    v = col[row]
                    if not v:
                        continue
                    hit = pivots.get(row)
                    if hit is None:
                        inv = field.inv(v)
                        pivots[row] = ([field.mul(inv, x) for x in col], {})
                        break
                    pcol = hit[0]
                    for r2 in range(row, n):
                        if pcol[r2]:
                            col[r2] = field.sub(col[r2], field.mul(v, pcol[r2]))
            combo = {t: x for t, x in comb.items() if x}
            return degree, combo, len(pivots), monomial_count(degree)
        index += 1
        if mono[0] + mono[1] > cap:
            raise RuntimeError("kernel search overran its counting bound")


def _witness_from_combo(field: Field, combo: dict[int, int]) -> BivariatePoly:
    """Build the certificate polynomial, scaled so that its first nonzero
    coefficient in the canonical monomial order is 1."""
    # monomial stream index -> (i, j); indices follow the canonical order
    need = max(combo) + 1
    order = []
    d = 0
    while len(order) < need:
        for j in range(d + 1):
            order.append((d - j, j))
        d += 1
    terms = {order[t]: c for t, c in combo.items()}
    first = min(terms, key=monomial_key)
    scale = field.inv(terms[first])
    return BivariatePoly(field, {m: field.mul(scale, c) for m, c in terms.items()})


def expansion_complexity(seq: Sequence, n: int) -> ExpansionWitness:
    """E_n of seq's first n terms, with a minimal witness polynomial."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > len(seq.terms):
        raise ValueError(f"n={n} exceeds available prefix of {len(seq.terms)}")
    terms = seq.terms[:n]
    if not any(terms):
        return ExpansionWitness(n, 0, None, 0, 0)
    field = seq.field
    if field.q == 2:
        bits = 0
        for idx, s in enumerate(terms):
            if s:
                bits |= 1 << idx
        e, combo, rank, mcount = _search_gf2(bits, n)
    else:
        e, combo, rank, mcount = _search_generic(field, list(terms), n)
    return ExpansionWitness(n, e, _witness_from_combo(field, combo), rank, mcount)


def expansion_value(field: Field, terms, n: int) -> int:
    """E_n without witness construction (hot path for sweeps)."""
    window = terms[:n]
    if not any(window):
        return 0
    if field.q == 2:
        bits = 0
        for idx, s in enumerate(window):
            if s:
                bits |= 1 << idx
        return _search_gf2(bits, n)[0]
    return _search_generic(field, list(window), n)[0]


def expansion_profile(seq: Sequence, n_max: int) -> ExpansionProfile:
    """E_n for n = 1..n_max, each recomputed in isolation.

    The growth law is enforced before returning: values never decrease and
    rise by at most 1, except that leaving an all-zero prefix may jump from
    0 to 2 (there is no witness to carry over; y itself is only a degree-1
    witness while the prefix is still zero).
    """
    if n_max > len(seq.terms):
        raise ValueError(f"n_max={n_max} exceeds available prefix")
    values = [expansion_value(seq.field, seq.terms, n) for n in range(1, n_max + 1)]
    for i in range(len(values) - 1):
        lo, hi = values[i], values[i + 1]
        if not (lo <= hi <= max(lo, 1) + 1):
            raise RuntimeError(
                f"expansion profile growth violated at n={i + 1}: {lo} -> {hi}"
            )
    return ExpansionProfile(tuple(values))


def brute_force_expansion(
    seq: Sequence, n: int, d_max: int
) -> Optional[ExpansionWitness]:
    """Independent oracle: enumerate every nonzero h of total degree <= d_max.

    Candidates are checked by direct substitution (series module) in a fixed
    order, degree stage by degree stage; the first hit therefore has total
    degree exactly E_n.  Returns None when no witness of degree <= d_max
    exists.
    """
    if n < 1 or n > len(seq.terms):
        raise ValueError("invalid prefix length")
    field = seq.field
    q = field.q
    if q ** monomial_count(d_max) > BRUTE_FORCE_CAP:
        raise ValueError(
            f"q^M = {q}^{monomial_count(d_max)} exceeds enumeration cap"
        )
    terms = seq.terms[:n]
    if not any(terms):
        return ExpansionWitness(n, 0, None)
    g = TruncatedSeries(field, terms)
    for stage in range(d_max + 1):
        monos = list(monomials_up_to(stage))
        m = len(monos)
        for code in range(1, q**m):
            coeffs = {}
            c = code
            for t in range(m):
                c, digit = divmod(c, q)
                if digit:
                    coeffs[monos[t]] = digit
            h = BivariatePoly(field, coeffs)
            if substitute(h, g, n).is_zero():
                return ExpansionWitness(n, h.total_degree, h)
    return None
