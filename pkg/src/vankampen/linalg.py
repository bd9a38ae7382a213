"""Exact linear algebra: GF(2) systems on bit-packed rows and integer lattices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple


def _bits(mask: int) -> List[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Gf2Result:
    """Outcome of a GF(2) solve.

    When solvable, ``solution`` is a bit mask over the columns.  Otherwise
    ``certificate`` lists row indices whose sum has all-zero coefficients and
    right-hand side 1.
    """

    solvable: bool
    solution: Optional[int] = None
    certificate: Optional[Tuple[int, ...]] = None

    def __bool__(self):
        return self.solvable

    def assignment(self) -> List[int]:
        return _bits(self.solution or 0)


def gf2_solve_rows(rows: Sequence[int], rhs: Sequence[int]) -> Gf2Result:
    """Solve ``rows[i] . x = rhs[i]`` over GF(2); rows are int bit masks."""
    pivots: Dict[int, Tuple[int, int, int]] = {}
    for i, (row, b) in enumerate(zip(rows, rhs)):
        combo = 1 << i
        b &= 1
        while row:
            col = (row & -row).bit_length() - 1
            piv = pivots.get(col)
            if piv is None:
                pivots[col] = (row, b, combo)
                break
            row ^= piv[0]
            b ^= piv[1]
            combo ^= piv[2]
        else:
            if b:
                return Gf2Result(False, certificate=tuple(_bits(combo)))
    x = 0
    for col in sorted(pivots, reverse=True):
        row, b, _ = pivots[col]
        rest = (row ^ (1 << col)) & x
        if (b ^ bin(rest).count("1")) & 1:
            x |= 1 << col
    return Gf2Result(True, solution=x)


def gf2_check(rows: Sequence[int], rhs: Sequence[int], result: Gf2Result) -> bool:
    """Independent verification of a solution or an inconsistency certificate."""
    if result.solvable:
        x = result.solution
        return all(bin(r & x).count("1") & 1 == (b & 1) for r, b in zip(rows, rhs))
    acc, b = 0, 0
    for i in result.certificate:
        acc ^= rows[i]
        b ^= rhs[i] & 1
    return acc == 0 and b == 1


# ---------------------------------------------------------------------------
# integer lattices

Sparse = Dict[int, int]


def _xgcd(a: int, b: int) -> Tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _axpy(k: int, x: Sparse, y: Sparse) -> Sparse:
    """Return ``y + k * x`` (new dict, zeros dropped)."""
    out = dict(y)
    for key, v in x.items():
        w = out.get(key, 0) + k * v
        if w:
            out[key] = w
        else:
            out.pop(key, None)
    return out


def _lin(a: int, x: Sparse, b: int, y: Sparse) -> Sparse:
    out = {}
    for key, v in x.items():
        out[key] = a * v
    for key, v in y.items():
        w = out.get(key, 0) + b * v
        if w:
            out[key] = w
        else:
            out.pop(key, None)
    return {k: v for k, v in out.items() if v}


class IntegerLattice:
    """Sublattice of Z^m spanned by sparse integer vectors.

    Kept in echelon form keyed by leading (smallest) coordinate with a
    positive leading entry, maintained by extended-gcd row operations.  Each
    basis row remembers how it combines the added generators, so membership
    queries can return integer coefficients.
    """

    def __init__(self):
        self._rows: Dict[int, Tuple[Sparse, Sparse]] = {}
        self.generators: List[Sparse] = []

    def __len__(self):
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def add(self, vector: Mapping[int, int]) -> int:
        """Add a generator; returns its generator id."""
        gid = len(self.generators)
        vec = {k: int(v) for k, v in vector.items() if v}
        self.generators.append(vec)
        combo = {gid: 1}
        while vec:
            p = min(vec)
            if p not in self._rows:
                if vec[p] < 0:
                    vec = {k: -v for k, v in vec.items()}
                    combo = {k: -v for k, v in combo.items()}
                self._rows[p] = (vec, combo)
                break
            brow, bcombo = self._rows[p]
            a, c = brow[p], vec[p]
            if c % a == 0:
                q = c // a
                vec = _axpy(-q, brow, vec)
                combo = _axpy(-q, bcombo, combo)
                continue
            g, s, t = _xgcd(a, c)
            if g < 0:
                g, s, t = -g, -s, -t
            # unimodular: [s t; -c/g a/g]
            new_b = _lin(s, brow, t, vec)
            new_bc = _lin(s, bcombo, t, combo)
            vec = _lin(-c // g, brow, a // g, vec)
            combo = _lin(-c // g, bcombo, a // g, combo)
            self._rows[p] = (new_b, new_bc)
        return gid

    def express(self, vector: Mapping[int, int]) -> Optional[Dict[int, int]]:
        """Integer coefficients over the generators summing to ``vector``, or None."""
        vec = {k: int(v) for k, v in vector.items() if v}
        coeffs: Sparse = {}
        while vec:
            p = min(vec)
            if p not in self._rows:
                return None
            brow, bcombo = self._rows[p]
            q, r = divmod(vec[p], brow[p])
            if r:
                return None
            vec = _axpy(-q, brow, vec)
            coeffs = _axpy(q, bcombo, coeffs)
        return coeffs

    def __contains__(self, vector) -> bool:
        return self.express(vector) is not None

    def combine(self, coeffs: Mapping[int, int]) -> Sparse:
        out: Sparse = {}
        for gid, k in coeffs.items():
            out = _axpy(k, self.generators[gid], out)
        return out


def dense_to_sparse(values: Iterable[int]) -> Sparse:
    return {i: int(v) for i, v in enumerate(values) if v}
