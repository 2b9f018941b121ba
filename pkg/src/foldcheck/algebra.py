"""Finite graded-commutative GF(2) algebras with Steenrod squares.

A degree-n Poincare algebra is stored densely: an ordered label basis per
degree, multiplication tables per degree pair as ``(r1, r2, r_out)`` uint8
arrays, Steenrod tables per ``(k, degree)`` as ``(r_d, r_{d+k})`` matrices,
a fundamental-evaluation functional on the top degree, and the coordinates
of the unit.  All arithmetic is mod 2; uint8 accumulation is safe because
wrap-around happens mod 256, which preserves parity.

Conventions:
  * entries absent from the tables are zero maps,
  * ``Sq^0`` is the identity and ``Sq^k x = 0`` for ``k > deg x``,
  * products and squares landing above the top degree are zero,
  * algebras compare and hash by identity; classes compare by value but only
    within the same owning algebra.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import DimensionMismatch, InvariantViolation
from .gf2 import gf2_invertible, to_gf2

__all__ = [
    "GradedAlgebra",
    "ClassZ2",
    "TotalClass",
    "ValidationReport",
    "build_algebra",
    "validate_algebra",
    "multiply",
    "steenrod_square",
    "total_sq",
    "evaluate_top",
    "invert_total",
    "kunneth",
    "cross_class",
    "cross_total",
    "connected_sum_algebra",
    "sum_embed",
]


def _frozen(a: np.ndarray) -> np.ndarray:
    a = to_gf2(a)
    a.setflags(write=False)
    return a


# ---------------------------------------------------------------------------
# core containers
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False, repr=False)
class GradedAlgebra:
    """Graded commutative GF(2) algebra with Steenrod squares.

    Instances are immutable after construction and identified by identity:
    classes belonging to different instances never interoperate.
    """

    top_degree: int
    basis: tuple[tuple[str, ...], ...]
    mult: Mapping[tuple[int, int], np.ndarray]
    sq_table: Mapping[tuple[int, int], np.ndarray]
    fundamental: np.ndarray
    unit: np.ndarray

    # -- structure ---------------------------------------------------------

    def rank(self, d: int) -> int:
        if 0 <= d <= self.top_degree:
            return len(self.basis[d])
        return 0

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.basis)

    def labels(self, d: int) -> tuple[str, ...]:
        return self.basis[d] if 0 <= d <= self.top_degree else ()

    def mult_block(self, d1: int, d2: int) -> np.ndarray:
        blk = self.mult.get((d1, d2))
        if blk is None:
            return np.zeros((self.rank(d1), self.rank(d2), self.rank(d1 + d2)), dtype=np.uint8)
        return blk

    def sq_block(self, k: int, d: int) -> np.ndarray:
        blk = self.sq_table.get((k, d))
        if blk is None:
            return np.zeros((self.rank(d), self.rank(d + k)), dtype=np.uint8)
        return blk

    def mult_entry(self, d1: int, i: int, d2: int, j: int) -> np.ndarray:
        """Coordinate vector of ``basis[d1][i] * basis[d2][j]``."""
        return self.mult_block(d1, d2)[i, j, :].copy()

    def sq_entry(self, k: int, d: int, i: int) -> np.ndarray:
        """Coordinate vector of ``Sq^k basis[d][i]``."""
        return self.sq_block(k, d)[i, :].copy()

    # -- element factories ---------------------------------------------------

    def zero(self, d: int) -> "ClassZ2":
        return ClassZ2(self, d, np.zeros(self.rank(d), dtype=np.uint8))

    def one(self) -> "ClassZ2":
        return ClassZ2(self, 0, self.unit)

    def element(self, d: int, coords: Iterable[int]) -> "ClassZ2":
        return ClassZ2(self, d, np.asarray(list(coords), dtype=np.uint8))

    def basis_element(self, d: int, i: int) -> "ClassZ2":
        coords = np.zeros(self.rank(d), dtype=np.uint8)
        coords[i] = 1
        return ClassZ2(self, d, coords)

    def __repr__(self) -> str:
        return f"GradedAlgebra(top_degree={self.top_degree}, ranks={list(self.ranks)})"


@dataclass(frozen=True, eq=False, repr=False)
class ClassZ2:
    """Homogeneous cohomology class: a degree plus dense GF(2) coordinates."""

    algebra: GradedAlgebra
    degree: int
    coords: np.ndarray

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError(f"negative degree {self.degree}")
        coords = _frozen(self.coords)
        expected = self.algebra.rank(self.degree)
        if coords.shape != (expected,):
            raise ValueError(
                f"degree-{self.degree} class needs {expected} coordinates, got {coords.shape}"
            )
        object.__setattr__(self, "coords", coords)

    def is_zero(self) -> bool:
        return not self.coords.any()

    def __add__(self, other: "ClassZ2") -> "ClassZ2":
        _check_same_algebra(self, other)
        if self.degree != other.degree:
            raise ValueError("cannot add classes of different degrees")
        return ClassZ2(self.algebra, self.degree, (self.coords ^ other.coords))

    def __mul__(self, other: "ClassZ2") -> "ClassZ2":
        return multiply(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClassZ2):
            return NotImplemented
        return (
            self.algebra is other.algebra
            and self.degree == other.degree
            and bool(np.array_equal(self.coords, other.coords))
        )

    def __str__(self) -> str:
        labels = self.algebra.labels(self.degree)
        terms = [labels[i] for i in range(len(labels)) if self.coords[i]]
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"ClassZ2(degree={self.degree}, {self!s})"


@dataclass(frozen=True, eq=False, repr=False)
class TotalClass:
    """Inhomogeneous class with one component in every degree 0..n."""

    algebra: GradedAlgebra
    components: tuple[np.ndarray, ...]

    def __post_init__(self):
        n = self.algebra.top_degree
        if len(self.components) != n + 1:
            raise ValueError(f"need {n + 1} components, got {len(self.components)}")
        comps = []
        for d, c in enumerate(self.components):
            c = _frozen(c)
            if c.shape != (self.algebra.rank(d),):
                raise ValueError(f"component {d} has wrong length")
            comps.append(c)
        object.__setattr__(self, "components", tuple(comps))

    @staticmethod
    def from_components(algebra: GradedAlgebra, comps: Sequence[Iterable[int]]) -> "TotalClass":
        return TotalClass(algebra, tuple(np.asarray(list(c), dtype=np.uint8) for c in comps))

    @staticmethod
    def unit_total(algebra: GradedAlgebra) -> "TotalClass":
        comps = [np.zeros(algebra.rank(d), dtype=np.uint8) for d in range(algebra.top_degree + 1)]
        comps[0] = algebra.unit.copy()
        return TotalClass(algebra, tuple(comps))

    def component(self, d: int) -> ClassZ2:
        if 0 <= d <= self.algebra.top_degree:
            return ClassZ2(self.algebra, d, self.components[d])
        return self.algebra.zero(d)

    def __mul__(self, other: "TotalClass") -> "TotalClass":
        _check_same_algebra(self, other)
        A = self.algebra
        n = A.top_degree
        out = [np.zeros(A.rank(t), dtype=np.uint8) for t in range(n + 1)]
        for d1 in range(n + 1):
            if not self.components[d1].any():
                continue
            for d2 in range(n + 1 - d1):
                if not other.components[d2].any():
                    continue
                blk = A.mult_block(d1, d2)
                out[d1 + d2] ^= (
                    np.einsum("i,j,ijo->o", self.components[d1], other.components[d2], blk) % 2
                ).astype(np.uint8)
        return TotalClass(A, tuple(out))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TotalClass):
            return NotImplemented
        return self.algebra is other.algebra and all(
            np.array_equal(a, b) for a, b in zip(self.components, other.components)
        )

    def __str__(self) -> str:
        terms: list[str] = []
        for d in range(self.algebra.top_degree + 1):
            labels = self.algebra.labels(d)
            terms.extend(labels[i] for i in range(len(labels)) if self.components[d][i])
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"TotalClass({self!s})"


def _check_same_algebra(x, y) -> None:
    if x.algebra is not y.algebra:
        raise ValueError("classes belong to different algebras")


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def build_algebra(
    top_degree: int,
    basis: Sequence[Sequence[str]],
    mult: Mapping[tuple[int, int], np.ndarray] | None = None,
    sq: Mapping[tuple[int, int], np.ndarray] | None = None,
    *,
    unit: Iterable[int] | None = None,
    fundamental: Iterable[int] | None = None,
    validate: bool = True,
) -> GradedAlgebra:
    """Assemble and (by default) validate a graded algebra.

    ``mult`` maps ``(d1, d2)`` to ``(r1, r2, r_out)`` tables and ``sq`` maps
    ``(k, d)`` to ``(r_d, r_{d+k})`` matrices.  Unit blocks and ``Sq^0`` are
    filled in automatically when the degree-0 rank is 1.
    """
    if top_degree < 0:
        raise ValueError("top_degree must be >= 0")
    if len(basis) != top_degree + 1:
        raise ValueError(f"need {top_degree + 1} basis lists, got {len(basis)}")
    basis_t = tuple(tuple(str(l) for l in deg) for deg in basis)
    for d, labels in enumerate(basis_t):
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate basis labels in degree {d}")
    ranks = [len(b) for b in basis_t]
    n = top_degree

    unit_v = (
        np.asarray(list(unit), dtype=np.uint8)
        if unit is not None
        else _indicator(ranks[0], 0 if ranks[0] else None)
    )
    fund_v = (
        np.asarray(list(fundamental), dtype=np.uint8)
        if fundamental is not None
        else _indicator(ranks[n], 0 if ranks[n] else None)
    )
    if unit_v.shape != (ranks[0],):
        raise ValueError("unit vector has wrong length")
    if fund_v.shape != (ranks[n],):
        raise ValueError("fundamental functional has wrong length")

    mult_in = dict(mult or {})
    sq_in = dict(sq or {})
    for (d1, d2), blk in mult_in.items():
        if d1 < 0 or d2 < 0 or d1 + d2 > n:
            if to_gf2(blk).any():
                raise ValueError(f"nonzero product table outside the grading: ({d1}, {d2})")
    for (k, d), blk in sq_in.items():
        if k < 0 or d < 0 or d > n:
            raise ValueError(f"Steenrod table key out of range: ({k}, {d})")
        if (k > d or d + k > n) and to_gf2(blk).any():
            raise ValueError(f"nonzero Sq^{k} table on degree {d} is out of range")

    mult_t: dict[tuple[int, int], np.ndarray] = {}
    for d1 in range(n + 1):
        for d2 in range(n + 1 - d1):
            key = (d1, d2)
            if key in mult_in:
                blk = to_gf2(mult_in[key])
            elif (d1 == 0 or d2 == 0) and ranks[0] == 1 and unit_v[0] == 1:
                if d1 == 0 and d2 == 0:
                    blk = np.ones((1, 1, 1), dtype=np.uint8)
                elif d1 == 0:
                    blk = np.eye(ranks[d2], dtype=np.uint8).reshape(1, ranks[d2], ranks[d2])
                else:
                    blk = np.eye(ranks[d1], dtype=np.uint8).reshape(ranks[d1], 1, ranks[d1])
            else:
                blk = np.zeros((ranks[d1], ranks[d2], ranks[d1 + d2]), dtype=np.uint8)
            if blk.shape != (ranks[d1], ranks[d2], ranks[d1 + d2]):
                raise ValueError(f"product table ({d1}, {d2}) has shape {blk.shape}")
            mult_t[key] = _frozen(blk)

    sq_t: dict[tuple[int, int], np.ndarray] = {}
    for d in range(n + 1):
        for k in range(0, min(d, n - d) + 1):
            key = (k, d)
            if key in sq_in:
                blk = to_gf2(sq_in[key])
            elif k == 0:
                blk = np.eye(ranks[d], dtype=np.uint8)
            else:
                blk = np.zeros((ranks[d], ranks[d + k]), dtype=np.uint8)
            if blk.shape != (ranks[d], ranks[d + k]):
                raise ValueError(f"Steenrod table ({k}, {d}) has shape {blk.shape}")
            sq_t[key] = _frozen(blk)

    alg = GradedAlgebra(
        top_degree=n,
        basis=basis_t,
        mult=mult_t,
        sq_table=sq_t,
        fundamental=_frozen(fund_v),
        unit=_frozen(unit_v),
    )
    if validate:
        report = validate_algebra(alg)
        if not report.ok:
            raise InvariantViolation("algebra-axioms", "; ".join(report.violations))
    return alg


def _indicator(length: int, index: int | None) -> np.ndarray:
    v = np.zeros(length, dtype=np.uint8)
    if index is not None and length:
        v[index] = 1
    return v


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        return "valid" if self.ok else "; ".join(self.violations)


def validate_algebra(A: GradedAlgebra) -> ValidationReport:
    """Check every ring/Steenrod/duality axiom; returns the violation list.

    Checks: unit action, commutativity, associativity, Sq^0 = id,
    Sq^(deg x) = squaring, the Cartan formula on all basis pairs, and
    nondegeneracy of the Poincare pairing in every degree.
    """
    n = A.top_degree
    bad: list[str] = []

    for d in range(n + 1):
        if A.rank(d) == 0:
            continue
        left = np.einsum("u,ujo->jo", A.unit, A.mult_block(0, d)) % 2
        right = np.einsum("iuo,u->io", A.mult_block(d, 0), A.unit) % 2
        eye = np.eye(A.rank(d), dtype=np.uint8)
        if not np.array_equal(left, eye):
            bad.append(f"unit: 1*x != x in degree {d}")
        if not np.array_equal(right, eye):
            bad.append(f"unit: x*1 != x in degree {d}")

    for d1 in range(n + 1):
        for d2 in range(d1, n + 1 - d1):
            blk = A.mult_block(d1, d2) % 2
            flipped = A.mult_block(d2, d1).transpose(1, 0, 2) % 2
            if not np.array_equal(blk, flipped):
                bad.append(f"commutativity: degrees ({d1}, {d2})")

    for d1 in range(n + 1):
        for d2 in range(n + 1 - d1):
            for d3 in range(n + 1 - d1 - d2):
                if 0 in (A.rank(d1), A.rank(d2), A.rank(d3)):
                    continue
                lhs = (
                    np.einsum("ijp,pko->ijko", A.mult_block(d1, d2), A.mult_block(d1 + d2, d3)) % 2
                )
                rhs = (
                    np.einsum("jkq,iqo->ijko", A.mult_block(d2, d3), A.mult_block(d1, d2 + d3)) % 2
                )
                if not np.array_equal(lhs, rhs):
                    bad.append(f"associativity: degrees ({d1}, {d2}, {d3})")

    for d in range(n + 1):
        if A.rank(d) == 0:
            continue
        if not np.array_equal(A.sq_block(0, d), np.eye(A.rank(d), dtype=np.uint8)):
            bad.append(f"sq0-identity: Sq^0 != id in degree {d}")
        if 2 * d <= n:
            squares = np.einsum("iio->io", A.mult_block(d, d))
            if not np.array_equal(A.sq_block(d, d) % 2, squares % 2):
                for i, label in enumerate(A.labels(d)):
                    if not np.array_equal(A.sq_block(d, d)[i] % 2, squares[i] % 2):
                        bad.append(
                            f"sq-top-squaring: Sq^k x = x*x at k = deg x fails for {label}"
                        )

    for d1 in range(n + 1):
        for d2 in range(n + 1 - d1):
            if 0 in (A.rank(d1), A.rank(d2)):
                continue
            prod = A.mult_block(d1, d2)
            for k in range(1, n - d1 - d2 + 1):
                if k > d1 + d2:
                    break
                lhs = np.einsum("ijp,po->ijo", prod, A.sq_block(k, d1 + d2)) % 2
                rhs = np.zeros_like(lhs)
                for u in range(0, k + 1):
                    v = k - u
                    if u > d1 or v > d2:
                        continue
                    rhs ^= (
                        np.einsum(
                            "ia,jb,abo->ijo",
                            A.sq_block(u, d1),
                            A.sq_block(v, d2),
                            A.mult_block(d1 + u, d2 + v),
                        )
                        % 2
                    ).astype(np.uint8)
                if not np.array_equal(lhs, rhs % 2):
                    bad.append(f"cartan: Sq^{k} on degrees ({d1}, {d2})")

    for d in range(n + 1):
        r1, r2 = A.rank(d), A.rank(n - d)
        if r1 != r2:
            bad.append(f"pairing: ranks differ in degrees {d} and {n - d} ({r1} vs {r2})")
            continue
        if r1 == 0:
            continue
        pairing = np.einsum("ijo,o->ij", A.mult_block(d, n - d), A.fundamental) % 2
        if not gf2_invertible(pairing):
            bad.append(f"pairing: degenerate in degree {d}")

    return ValidationReport(tuple(bad))


# ---------------------------------------------------------------------------
# elementary operations
# ---------------------------------------------------------------------------


def multiply(x: ClassZ2, y: ClassZ2) -> ClassZ2:
    """Cup product; zero when the result degree exceeds the top degree."""
    _check_same_algebra(x, y)
    A = x.algebra
    d = x.degree + y.degree
    if d > A.top_degree:
        return A.zero(d)
    blk = A.mult_block(x.degree, y.degree)
    coords = np.einsum("i,j,ijo->o", x.coords, y.coords, blk) % 2
    return ClassZ2(A, d, coords.astype(np.uint8))


def steenrod_square(k: int, x: ClassZ2) -> ClassZ2:
    """``Sq^k x``: identity for k = 0, squaring at k = deg x, zero beyond."""
    if k < 0:
        raise ValueError("negative Steenrod index")
    A = x.algebra
    d = x.degree
    if k > d or d + k > A.top_degree:
        return A.zero(d + k)
    coords = (x.coords @ A.sq_block(k, d)) % 2
    return ClassZ2(A, d + k, coords.astype(np.uint8))


def total_sq(v: TotalClass) -> TotalClass:
    """Total Steenrod square ``Sq(v) = sum_k Sq^k(v_j)`` by target degree."""
    A = v.algebra
    n = A.top_degree
    out = [np.zeros(A.rank(t), dtype=np.uint8) for t in range(n + 1)]
    for j in range(n + 1):
        comp = v.components[j]
        if not comp.any():
            continue
        for k in range(0, min(j, n - j) + 1):
            out[j + k] ^= ((comp @ A.sq_block(k, j)) % 2).astype(np.uint8)
    return TotalClass(A, tuple(out))


def evaluate_top(x: ClassZ2) -> int:
    """Pairing of a top-degree class with the fundamental class (0 or 1)."""
    A = x.algebra
    if x.degree != A.top_degree:
        raise ValueError(f"evaluate_top needs degree {A.top_degree}, got {x.degree}")
    return int((x.coords @ A.fundamental) % 2)


def invert_total(u: TotalClass) -> TotalClass:
    """Formal inverse of a unital total class (so ``u * invert_total(u) = 1``)."""
    A = u.algebra
    n = A.top_degree
    if not np.array_equal(u.components[0], A.unit):
        raise ValueError("invert_total needs a unital degree-0 component")
    inv = [np.zeros(A.rank(t), dtype=np.uint8) for t in range(n + 1)]
    inv[0] = A.unit.copy()
    for d in range(1, n + 1):
        acc = np.zeros(A.rank(d), dtype=np.uint8)
        for i in range(1, d + 1):
            if not u.components[i].any() or not inv[d - i].any():
                continue
            blk = A.mult_block(i, d - i)
            acc ^= (np.einsum("i,j,ijo->o", u.components[i], inv[d - i], blk) % 2).astype(
                np.uint8
            )
        inv[d] = acc
    return TotalClass(A, tuple(inv))


# ---------------------------------------------------------------------------
# Kunneth product
# ---------------------------------------------------------------------------


def _disambiguate(base: Sequence[Sequence[str]], other: Sequence[Sequence[str]]):
    """Prime the positive-degree labels of ``other`` until disjoint from ``base``."""
    taken = {l for deg in base[1:] for l in deg}
    labels = [list(deg) for deg in other]
    while taken & {l for deg in labels[1:] for l in deg}:
        labels = [labels[0]] + [[l + "'" for l in deg] for deg in labels[1:]]
    return labels


def _pair_label(la: str, lb: str) -> str:
    if la == "1":
        return lb
    if lb == "1":
        return la
    return f"{la}*{lb}"


def _kunneth_layout(A: GradedAlgebra, B: GradedAlgebra, d: int) -> list[tuple[int, int, int]]:
    """Blocks ``(i, j, start)`` of degree-d basis pairs, A-degree ascending."""
    out = []
    start = 0
    for i in range(d + 1):
        j = d - i
        size = A.rank(i) * B.rank(j)
        if size:
            out.append((i, j, start))
        start += size
    return out


def kunneth(A: GradedAlgebra, B: GradedAlgebra, *, validate: bool = True) -> GradedAlgebra:
    """Tensor-product algebra on pair bases, Steenrod squares via Cartan."""
    n = A.top_degree + B.top_degree
    labels_b = _disambiguate(A.basis, B.basis)

    basis: list[list[str]] = []
    for d in range(n + 1):
        row: list[str] = []
        for i, j, _ in _kunneth_layout(A, B, d):
            for la in A.basis[i]:
                for lb in labels_b[j]:
                    row.append(_pair_label(la, lb))
        basis.append(row)
    ranks = [len(b) for b in basis]

    mult: dict[tuple[int, int], np.ndarray] = {}
    for d1 in range(n + 1):
        for d2 in range(n + 1 - d1):
            blk = np.zeros((ranks[d1], ranks[d2], ranks[d1 + d2]), dtype=np.uint8)
            rows = _kunneth_layout(A, B, d1)
            cols = _kunneth_layout(A, B, d2)
            outs = {(i, j): s for i, j, s in _kunneth_layout(A, B, d1 + d2)}
            for i1, j1, s1 in rows:
                for i2, j2, s2 in cols:
                    key = (i1 + i2, j1 + j2)
                    if key not in outs:
                        continue
                    ma = A.mult_block(i1, i2)
                    mb = B.mult_block(j1, j2)
                    piece = np.einsum("ACO,BDP->ABCDOP", ma, mb).reshape(
                        ma.shape[0] * mb.shape[0],
                        ma.shape[1] * mb.shape[1],
                        ma.shape[2] * mb.shape[2],
                    )
                    so = outs[key]
                    blk[
                        s1 : s1 + piece.shape[0],
                        s2 : s2 + piece.shape[1],
                        so : so + piece.shape[2],
                    ] ^= (piece % 2).astype(np.uint8)
            mult[(d1, d2)] = blk

    sq: dict[tuple[int, int], np.ndarray] = {}
    for d in range(n + 1):
        for k in range(1, min(d, n - d) + 1):
            blk = np.zeros((ranks[d], ranks[d + k]), dtype=np.uint8)
            outs = {(i, j): s for i, j, s in _kunneth_layout(A, B, d + k)}
            for i, j, s in _kunneth_layout(A, B, d):
                for u in range(0, k + 1):
                    v = k - u
                    if u > i or v > j or (i + u, j + v) not in outs:
                        continue
                    piece = np.kron(A.sq_block(u, i), B.sq_block(v, j))
                    so = outs[(i + u, j + v)]
                    blk[s : s + piece.shape[0], so : so + piece.shape[1]] ^= (
                        piece % 2
                    ).astype(np.uint8)
            sq[(k, d)] = blk

    return build_algebra(
        n,
        basis,
        mult,
        sq,
        unit=np.kron(A.unit, B.unit),
        fundamental=np.kron(A.fundamental, B.fundamental),
        validate=validate,
    )


def cross_class(P: GradedAlgebra, x: ClassZ2, y: ClassZ2) -> ClassZ2:
    """Cross product ``x x y`` inside the Kunneth algebra built from (A, B)."""
    A, B = x.algebra, y.algebra
    d = x.degree + y.degree
    coords = np.zeros(P.rank(d), dtype=np.uint8)
    for i, j, s in _kunneth_layout(A, B, d):
        if i == x.degree and j == y.degree:
            piece = np.kron(x.coords, y.coords)
            coords[s : s + piece.size] = piece
    return ClassZ2(P, d, coords)


def cross_total(P: GradedAlgebra, u: TotalClass, v: TotalClass) -> TotalClass:
    """Cross product of total classes (degreewise Kunneth placement)."""
    A, B = u.algebra, v.algebra
    n = P.top_degree
    out = [np.zeros(P.rank(t), dtype=np.uint8) for t in range(n + 1)]
    for t in range(n + 1):
        for i, j, s in _kunneth_layout(A, B, t):
            piece = np.kron(u.components[i], v.components[j])
            out[t][s : s + piece.size] ^= piece
    return TotalClass(P, tuple(out))


# ---------------------------------------------------------------------------
# connected sum
# ---------------------------------------------------------------------------


def connected_sum_algebra(
    A: GradedAlgebra, B: GradedAlgebra, *, validate: bool = True
) -> GradedAlgebra:
    """Cohomology of a connected sum: middle degrees direct-sum, tops glued.

    Cross products of positive-degree classes from different summands vanish;
    each summand's top class is identified with the shared top class.
    """
    n = A.top_degree
    if B.top_degree != n:
        raise DimensionMismatch(
            f"connected sum needs equal dimensions, got {n} and {B.top_degree}"
        )
    if n < 1:
        raise ValueError("connected sum needs dimension >= 1")
    for S in (A, B):
        if S.rank(0) != 1 or S.rank(n) != 1:
            raise ValueError("connected summands must be connected closed pieces")

    labels_b = _disambiguate(A.basis, B.basis)
    basis: list[list[str]] = [["1"]]
    for d in range(1, n):
        basis.append(list(A.basis[d]) + list(labels_b[d]))
    top = "t"
    while any(top in row for row in basis):
        top += "'"
    basis.append([top])
    ranks = [len(b) for b in basis]

    def a_rank(d: int) -> int:
        return A.rank(d) if 0 < d < n else 0

    mult: dict[tuple[int, int], np.ndarray] = {}
    for d1 in range(1, n):
        for d2 in range(1, n + 1 - d1):
            blk = np.zeros((ranks[d1], ranks[d2], ranks[d1 + d2]), dtype=np.uint8)
            ra1, ra2 = a_rank(d1), a_rank(d2)
            blk_a = A.mult_block(d1, d2)
            blk_b = B.mult_block(d1, d2)
            if d1 + d2 < n:
                blk[:ra1, :ra2, : A.rank(d1 + d2)] = blk_a
                blk[ra1:, ra2:, A.rank(d1 + d2) :] = blk_b
            else:
                blk[:ra1, :ra2, 0] = np.einsum("ijo,o->ij", blk_a, A.fundamental) % 2
                blk[ra1:, ra2:, 0] = np.einsum("ijo,o->ij", blk_b, B.fundamental) % 2
            mult[(d1, d2)] = blk

    sq: dict[tuple[int, int], np.ndarray] = {}
    for d in range(1, n):
        for k in range(1, min(d, n - d) + 1):
            blk = np.zeros((ranks[d], ranks[d + k]), dtype=np.uint8)
            ra = a_rank(d)
            sa = A.sq_block(k, d)
            sb = B.sq_block(k, d)
            if d + k < n:
                blk[:ra, : A.rank(d + k)] = sa
                blk[ra:, A.rank(d + k) :] = sb
            else:
                blk[:ra, 0] = (sa @ A.fundamental) % 2
                blk[ra:, 0] = (sb @ B.fundamental) % 2
            sq[(k, d)] = blk

    return build_algebra(n, basis, mult, sq, validate=validate)


def sum_embed(S: GradedAlgebra, x: ClassZ2, side: int) -> ClassZ2:
    """Image in the connected-sum algebra of a class from summand 0 or 1.

    Top-degree classes land on the shared top via fundamental evaluation.
    """
    A = x.algebra
    n = S.top_degree
    d = x.degree
    coords = np.zeros(S.rank(d), dtype=np.uint8)
    if d == 0:
        coords[0] = x.coords[0] if x.coords.size else 0
    elif d == n:
        coords[0] = int((x.coords @ A.fundamental) % 2)
    else:
        offset = 0 if side == 0 else S.rank(d) - x.coords.size
        coords[offset : offset + x.coords.size] = x.coords
    return ClassZ2(S, d, coords)
