"""Dense linear algebra over a prime field F_p.

Vectors are tuples of ints in ``[0, p)``; matrices are tuples of row tuples.
A subspace is stored as its reduced row echelon basis, which is canonical, so
equality of subspaces is equality of tuples.  Over F_2 the elimination runs on
bit-packed rows (Python ints), which is the hot path of the oracle.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Sequence

Vec = tuple[int, ...]
Basis = tuple[Vec, ...]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def _pack(row: Sequence[int]) -> int:
    x = 0
    for bit in row:
        x = (x << 1) | bit
    return x


def _unpack(x: int, width: int) -> Vec:
    return tuple((x >> (width - 1 - c)) & 1 for c in range(width))


def _rref_gf2(rows: Sequence[Sequence[int]], width: int) -> tuple[list[int], list[int]]:
    packed = [_pack(r) for r in rows]
    out: list[int] = []
    pivots: list[int] = []
    for col in range(width):
        bit = 1 << (width - 1 - col)
        for idx, r in enumerate(packed):
            if r & bit:
                break
        else:
            continue
        r = packed.pop(idx)
        packed = [x ^ r if x & bit else x for x in packed]
        out = [x ^ r if x & bit else x for x in out]
        out.append(r)
        pivots.append(col)
    return out, pivots


def rref(rows: Sequence[Sequence[int]], p: int, width: int | None = None) -> Basis:
    """Reduced row echelon form with zero rows dropped."""
    rows = [tuple(r) for r in rows]
    if width is None:
        if not rows:
            return ()
        width = len(rows[0])
    if p == 2:
        packed, _ = _rref_gf2(rows, width)
        return tuple(_unpack(x, width) for x in packed)
    m = [[x % p for x in r] for r in rows]
    out: list[list[int]] = []
    for col in range(width):
        for idx, r in enumerate(m):
            if r[col]:
                break
        else:
            continue
        r = m.pop(idx)
        inv = pow(r[col], p - 2, p)
        r = [(x * inv) % p for x in r]
        for other in itertools.chain(m, out):
            f = other[col]
            if f:
                for c in range(col, width):
                    other[c] = (other[c] - f * r[c]) % p
        out.append(r)
    return tuple(tuple(r) for r in out)


def pivots(basis: Basis) -> tuple[int, ...]:
    return tuple(next(c for c, x in enumerate(row) if x) for row in basis)


def rank(rows: Sequence[Sequence[int]], p: int, width: int | None = None) -> int:
    return len(rref(rows, p, width))


def nullspace(rows: Sequence[Sequence[int]], ncols: int, p: int) -> Basis:
    """RREF basis of ``{x : M x = 0}`` for the matrix with the given rows."""
    red = rref(rows, p, ncols)
    piv = pivots(red)
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for row, pc in zip(red, piv):
            x[pc] = (-row[f]) % p
        basis.append(x)
    return rref(basis, p, ncols)


def reduce(vec: Sequence[int], basis: Basis, p: int) -> Vec:
    """Remainder of ``vec`` modulo ``span(basis)``: zero at every pivot column."""
    v = list(vec)
    for row, pc in zip(basis, pivots(basis)):
        f = v[pc]
        if f:
            v = [(x - f * y) % p for x, y in zip(v, row)]
    return tuple(v)


def contains(basis: Basis, vec: Sequence[int], p: int) -> bool:
    return not any(reduce(vec, basis, p))


def is_subspace(small: Basis, big: Basis, p: int) -> bool:
    return all(contains(big, v, p) for v in small)


def span_sum(a: Basis, b: Basis, p: int, width: int) -> Basis:
    return rref(list(a) + list(b), p, width)


def coords(vec: Sequence[int], basis: Basis) -> Vec:
    """Coordinates of a vector known to lie in ``span(basis)`` (RREF): read the pivots."""
    return tuple(vec[pc] for pc in pivots(basis))


def mat_vec(m: Sequence[Sequence[int]], v: Sequence[int], p: int) -> Vec:
    return tuple(sum(x * y for x, y in zip(row, v)) % p for row in m)


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], p: int) -> tuple[Vec, ...]:
    cols = list(zip(*b)) if b else []
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) % p for col in cols) for row in a)


def identity(k: int) -> tuple[Vec, ...]:
    return tuple(tuple(int(r == c) for c in range(k)) for r in range(k))


def mat_pow(m: Sequence[Sequence[int]], e: int, p: int) -> tuple[Vec, ...]:
    result = identity(len(m))
    base = tuple(tuple(r) for r in m)
    while e:
        if e & 1:
            result = mat_mul(result, base, p)
        base = mat_mul(base, base, p)
        e >>= 1
    return result


def image(m: Sequence[Sequence[int]], basis: Basis, p: int, width: int) -> Basis:
    """RREF basis of ``m(span(basis))`` (``m`` maps columns, width = rows of ``m``)."""
    return rref([mat_vec(m, v, p) for v in basis], p, width)


def preimage(m: Sequence[Sequence[int]], target: Basis, p: int, ncols: int) -> Basis:
    """RREF basis of ``{x in F^ncols : m x in span(target)}``."""
    piv = pivots(target)
    pset = set(piv)
    eqs = []
    for c in range(len(m)):
        if c in pset:
            continue
        row = list(m[c])
        for t, pc in zip(target, piv):
            f = t[c]
            if f:
                row = [(x - f * y) % p for x, y in zip(row, m[pc])]
        eqs.append(row)
    return nullspace(eqs, ncols, p)


def intersect(a: Basis, b: Basis, p: int, width: int) -> Basis:
    """``span(a) ∩ span(b)`` via the preimage of b under the inclusion of a."""
    if not a or not b:
        return ()
    # x in span(a): x = sum c_k a_k; condition x in span(b)
    cols = tuple(zip(*a))  # width x dim(a) matrix with a_k as columns
    coeffs = preimage(cols, b, p, len(a))
    return rref([tuple(sum(c * row[k] for c, row in zip(co, a)) % p for k in range(width)) for co in coeffs], p, width)


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int, p: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def count_subspaces(n: int, p: int) -> int:
    return sum(gaussian_binomial(n, k, p) for k in range(n + 1))


def _rref_coefficient_matrices(w: int, k: int, p: int) -> Iterator[tuple[Vec, ...]]:
    """All k x w RREF matrices of rank k over F_p."""
    for piv in itertools.combinations(range(w), k):
        free_slots = [(r, c) for r in range(k) for c in range(piv[r] + 1, w) if c not in piv]
        for values in itertools.product(range(p), repeat=len(free_slots)):
            m = [[0] * w for _ in range(k)]
            for r, pc in enumerate(piv):
                m[r][pc] = 1
            for (r, c), x in zip(free_slots, values):
                m[r][c] = x
            yield tuple(tuple(r) for r in m)


def subspaces(basis: Basis, p: int, dims: Sequence[int] | None = None) -> Iterator[Basis]:
    """Canonical bases of all subspaces of ``span(basis)`` (``basis`` must be RREF).

    If C is an RREF coefficient matrix and W is RREF, then C W is RREF in the
    ambient coordinates, so no re-reduction is needed.
    """
    w = len(basis)
    if dims is None:
        dims = range(w + 1)
    width = len(basis[0]) if basis else 0
    for k in dims:
        if k == 0:
            yield ()
            continue
        for coeff in _rref_coefficient_matrices(w, k, p):
            yield tuple(
                tuple(sum(c * basis[r][col] for r, c in enumerate(crow) if c) % p for col in range(width))
                for crow in coeff
            )


def hyperplanes(basis: Basis, p: int) -> Iterator[Basis]:
    """Codimension-one subspaces of ``span(basis)``."""
    return subspaces(basis, p, dims=[len(basis) - 1]) if basis else iter(())


def full_space(width: int) -> Basis:
    return identity(width)


def upper_covers(small: Basis, big: Basis, p: int, width: int) -> Iterator[Basis]:
    """Subspaces of ``span(big)`` containing ``span(small)`` with one more dimension."""
    # big reduced modulo small spans a complement; its lines biject with the covers
    comp = rref([reduce(v, small, p) for v in big], p, width)
    for line in subspaces(comp, p, dims=[1]):
        yield span_sum(small, line, p, width)
