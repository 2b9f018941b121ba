"""Manifold records: catalog atoms, connected sums, products, documents.

Every construction path funnels through one assembler that derives the
Stiefel-Whitney classes via Wu's theorem (cross-checking any stored total
class), resolves the twisted class W_3, and then validates the finished
record against the full invariant battery.  Records are immutable and
compare by identity; value-level comparisons in tests go through the
stored invariants.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Any, Mapping

import numpy as np

from .algebra import (
    GradedAlgebra,
    TotalClass,
    build_algebra,
    connected_sum_algebra,
    cross_total,
    evaluate_top,
    kunneth,
    total_sq,
)
from .characteristic import w3_twisted_status, wu_total
from .errors import DimensionMismatch, InvariantViolation, SchemaError
from .tristate import P1Data, P1Kind, TriState, p1_add

__all__ = [
    "Manifold",
    "sphere",
    "real_projective",
    "complex_projective",
    "cp2_reversed",
    "k3",
    "orientable_surface",
    "nonorientable_surface",
    "point",
    "atom",
    "connected_sum",
    "product",
    "load_manifold",
    "validate_manifold",
]


@dataclass(frozen=True, eq=False)
class Manifold:
    """A closed smooth manifold presented by its mod-2 cohomological data."""

    name: str
    dim: int
    orientable: bool
    euler: int
    signature: int | None
    algebra: GradedAlgebra
    w: TotalClass
    p1: P1Data
    w3_twisted: TriState
    stably_parallelizable: bool = False
    torsion_free: bool = False

    @property
    def connected(self) -> bool:
        return self.algebra.rank(0) == 1

    def __repr__(self) -> str:
        return f"Manifold({self.name!r}, dim={self.dim})"


# ---------------------------------------------------------------------------
# assembly and validation
# ---------------------------------------------------------------------------


def _assemble(
    name: str,
    dim: int,
    orientable: bool,
    euler: int,
    signature: int | None,
    algebra: GradedAlgebra,
    *,
    w: TotalClass | None,
    p1: P1Data,
    w3_stored: TriState | None = None,
    stably_parallelizable: bool = False,
    torsion_free: bool = False,
) -> Manifold:
    derived = total_sq(wu_total(algebra))
    total = w if w is not None else derived
    top_eval = evaluate_top(total.component(dim))
    if top_eval != euler % 2:
        raise InvariantViolation(
            "Euler parity", f"<w_{dim}, [M]> = {top_eval} but chi = {euler}"
        )
    if w is not None:
        for d, (ours, theirs) in enumerate(zip(derived.components, w.components)):
            if not np.array_equal(ours, theirs):
                raise InvariantViolation(
                    "wu-consistency",
                    f"stored w_{d} disagrees with the Wu-derived Stiefel-Whitney class",
                )
    m = Manifold(
        name=name,
        dim=dim,
        orientable=orientable,
        euler=euler,
        signature=signature,
        algebra=algebra,
        w=total,
        p1=p1,
        w3_twisted=w3_twisted_status(total, w3_stored),
        stably_parallelizable=stably_parallelizable,
        torsion_free=torsion_free,
    )
    validate_manifold(m)
    return m


def validate_manifold(m: Manifold) -> None:
    """Check every record-level invariant; raise InvariantViolation if any fails.

    Algebra axioms (ring structure, Cartan, nondegenerate pairing) are
    enforced earlier, when the algebra itself is built.  This layer checks
    the manifold-flavored facts: Euler characteristic against ranks and
    against the top Whitney class, orientability against w_1, signature
    presence and parity, the p_1 constraints (kind, reduction mod 2, the
    signature theorem in dimension 4), W_3 consistency, and the structure
    flags.
    """
    A, n = m.algebra, m.dim
    if A.top_degree != n:
        raise InvariantViolation("dimension", f"algebra has top degree {A.top_degree}, not {n}")

    alternating = sum((-1 if d % 2 else 1) * r for d, r in enumerate(A.ranks))
    if alternating != m.euler:
        raise InvariantViolation(
            "euler-rank", f"chi = {m.euler} but the ranks alternate to {alternating}"
        )

    if m.w.component(1).is_zero() != m.orientable:
        raise InvariantViolation("orientability", "w_1 contradicts the orientability flag")

    top_eval = evaluate_top(m.w.component(n))
    if top_eval != m.euler % 2:
        raise InvariantViolation(
            "Euler parity", f"<w_{n}, [M]> = {top_eval} but chi = {m.euler}"
        )

    if m.orientable and n % 4 == 0:
        if m.signature is None:
            raise InvariantViolation("signature", "oriented 4k-manifold needs a signature")
        if abs(m.signature) > A.rank(n // 2):
            raise InvariantViolation(
                "signature", f"|sigma| = {abs(m.signature)} exceeds the middle rank"
            )
        if (m.signature - m.euler) % 2:
            raise InvariantViolation(
                "signature parity", f"sigma = {m.signature} and chi = {m.euler} differ mod 2"
            )
    elif m.signature is not None:
        raise InvariantViolation("signature", "signature recorded where none is defined")

    if m.p1.kind is P1Kind.INTEGER and not (m.orientable and n == 4):
        raise InvariantViolation(
            "p1-kind", "integer p_1 is reserved for oriented 4-manifolds"
        )
    if n <= 3 and not m.p1.is_known_zero:
        raise InvariantViolation("p1-range", "H^4 = 0 forces p_1 = 0")
    if n == 4:
        w2 = m.w.component(2)
        w2sq_eval = evaluate_top(w2 * w2)
        if m.orientable:
            if m.p1.kind is not P1Kind.INTEGER:
                raise InvariantViolation(
                    "p1-kind", "oriented 4-manifolds carry <p_1, [M]> as an integer"
                )
            if m.p1.number % 2 != w2sq_eval:
                raise InvariantViolation(
                    "p1-reduction", f"p_1 = {m.p1.number} but <w_2^2, [M]> = {w2sq_eval}"
                )
            if m.p1.number != 3 * m.signature:
                raise InvariantViolation(
                    "p1-signature", f"p_1 = {m.p1.number} but 3 sigma = {3 * m.signature}"
                )
        else:
            if m.p1.is_unknown or (m.p1.is_known_nonzero != bool(w2sq_eval)):
                raise InvariantViolation(
                    "p1-reduction",
                    "p_1 of a non-orientable 4-manifold is determined by w_2^2",
                )
    if n >= 5:
        w2 = m.w.component(2)
        if m.p1.is_known_zero and not (w2 * w2).is_zero():
            raise InvariantViolation("p1-reduction", "w_2^2 != 0 forces p_1 != 0")

    w3_twisted_status(m.w, m.w3_twisted)

    if m.stably_parallelizable:
        if not m.orientable:
            raise InvariantViolation(
                "stable-parallelizability", "non-orientable manifolds are never stably parallelizable"
            )
        if any(not m.w.component(d).is_zero() for d in range(1, n + 1)):
            raise InvariantViolation("stable-parallelizability", "w != 1")
        if not m.p1.is_known_zero:
            raise InvariantViolation("stable-parallelizability", "p_1 != 0")

    if m.torsion_free and not m.orientable and n <= 4:
        raise InvariantViolation(
            "torsion-flag", f"H^{n}(M; Z) = Z/2 is torsion in the degree-4 range"
        )


# ---------------------------------------------------------------------------
# atoms
# ---------------------------------------------------------------------------


def _pow_label(symbol: str, d: int) -> str:
    if d == 0:
        return "1"
    return symbol if d == 1 else f"{symbol}^{d}"


def sphere(n: int) -> Manifold:
    """S(n), n >= 0.  S(0) is the only disconnected catalog member."""
    if n < 0:
        raise ValueError("sphere dimension must be >= 0")
    if n == 0:
        table = np.zeros((2, 2, 2), dtype=np.uint8)
        table[0, 0, 0] = 1
        table[1, 1, 1] = 1
        algebra = build_algebra(
            0, [["p", "q"]], {(0, 0): table}, unit=[1, 1], fundamental=[1, 1]
        )
        return _assemble(
            "S0", 0, True, 2, 0, algebra,
            w=None, p1=P1Data.zero_class(), stably_parallelizable=True, torsion_free=True,
        )
    basis = [["1"]] + [[] for _ in range(n - 1)] + [["s"]]
    algebra = build_algebra(n, basis)
    return _assemble(
        f"S{n}", n, True,
        euler=2 if n % 2 == 0 else 0,
        signature=0 if n % 4 == 0 else None,
        algebra=algebra,
        w=None,
        p1=P1Data.integer(0) if n == 4 else P1Data.zero_class(),
        stably_parallelizable=True,
        torsion_free=True,
    )


def real_projective(n: int) -> Manifold:
    """RP(n), n >= 1: truncated polynomial algebra on a degree-1 class a."""
    if n < 1:
        raise ValueError("real projective space needs n >= 1")
    basis = [[_pow_label("a", d)] for d in range(n + 1)]
    mult = {
        (d1, d2): np.ones((1, 1, 1), dtype=np.uint8)
        for d1 in range(1, n)
        for d2 in range(1, n + 1 - d1)
    }
    sq = {
        (k, d): np.array([[comb(d, k) % 2]], dtype=np.uint8)
        for d in range(1, n)
        for k in range(1, min(d, n - d) + 1)
    }
    algebra = build_algebra(n, basis, mult, sq)
    w = TotalClass.from_components(algebra, [[comb(n + 1, d) % 2] for d in range(n + 1)])
    if n <= 3:
        p1 = P1Data.zero_class()
    elif comb(n + 1, 2) % 2:
        p1 = P1Data.nonzero_class(f"p_1 = C({n + 1},2) a^4")
    else:
        p1 = P1Data.zero_class(f"p_1 = C({n + 1},2) a^4")
    return _assemble(
        f"RP{n}", n,
        orientable=n % 2 == 1,
        euler=1 if n % 2 == 0 else 0,
        signature=None,
        algebra=algebra,
        w=w,
        p1=p1,
        w3_stored=TriState.zero("H^3 with the relevant coefficients vanishes")
        if n % 2 == 1
        else None,
        torsion_free=n == 1,
    )


def complex_projective(n: int) -> Manifold:
    """CP(n), n >= 1: truncated polynomial algebra on a degree-2 class h."""
    if n < 1:
        raise ValueError("complex projective space needs n >= 1")
    basis: list[list[str]] = []
    for d in range(2 * n + 1):
        basis.append([_pow_label("h", d // 2)] if d % 2 == 0 else [])
    mult = {
        (2 * i, 2 * j): np.ones((1, 1, 1), dtype=np.uint8)
        for i in range(1, n)
        for j in range(1, n + 1 - i)
    }
    sq = {
        (2 * j, 2 * i): np.array([[comb(i, j) % 2]], dtype=np.uint8)
        for i in range(1, n)
        for j in range(1, min(i, n - i) + 1)
    }
    algebra = build_algebra(2 * n, basis, mult, sq)
    comps = []
    for d in range(2 * n + 1):
        comps.append([comb(n + 1, d // 2) % 2] if d % 2 == 0 else [])
    w = TotalClass.from_components(algebra, comps)
    if n == 1:
        p1 = P1Data.zero_class()
    elif n == 2:
        p1 = P1Data.integer(3)
    else:
        p1 = P1Data.nonzero_class(f"p_1 = {n + 1} h^2")
    return _assemble(
        f"CP{n}", 2 * n, True,
        euler=n + 1,
        signature=1 if n % 2 == 0 else None,
        algebra=algebra,
        w=w,
        p1=p1,
        w3_stored=TriState.zero("H^3 = 0"),
        torsion_free=True,
    )


def cp2_reversed() -> Manifold:
    """CP(2) with the reversed orientation: same mod-2 data, sigma = -1."""
    template = complex_projective(2)
    return _assemble(
        "CP2~", 4, True,
        euler=3,
        signature=-1,
        algebra=template.algebra,
        w=template.w,
        p1=P1Data.integer(-3),
        w3_stored=TriState.zero("H^3 = 0"),
        torsion_free=True,
    )


def _e8_mod2() -> np.ndarray:
    """E8 intersection form mod 2: the Dynkin-diagram adjacency matrix."""
    edges = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]
    q = np.zeros((8, 8), dtype=np.uint8)
    for a, b in edges:
        q[a - 1, b - 1] = q[b - 1, a - 1] = 1
    return q


def k3() -> Manifold:
    """The K3 surface: even intersection form E8 + E8 + 3H, sigma = -16."""
    hyper = np.array([[0, 1], [1, 0]], dtype=np.uint8)
    q = np.zeros((22, 22), dtype=np.uint8)
    q[0:8, 0:8] = _e8_mod2()
    q[8:16, 8:16] = _e8_mod2()
    for i in range(3):
        s = 16 + 2 * i
        q[s : s + 2, s : s + 2] = hyper
    basis = [["1"], [], [f"x{i}" for i in range(1, 23)], [], ["t"]]
    algebra = build_algebra(4, basis, {(2, 2): q.reshape(22, 22, 1)})
    return _assemble(
        "K3", 4, True,
        euler=24,
        signature=-16,
        algebra=algebra,
        w=None,
        p1=P1Data.integer(-48),
        torsion_free=True,
    )


def orientable_surface(g: int) -> Manifold:
    """Sigma(g), g >= 0: closed orientable surface of genus g."""
    if g < 0:
        raise ValueError("genus must be >= 0")
    deg1 = [l for i in range(1, g + 1) for l in (f"a{i}", f"b{i}")]
    table = np.zeros((2 * g, 2 * g, 1), dtype=np.uint8)
    for i in range(g):
        table[2 * i, 2 * i + 1, 0] = 1
        table[2 * i + 1, 2 * i, 0] = 1
    algebra = build_algebra(2, [["1"], deg1, ["t"]], {(1, 1): table})
    return _assemble(
        f"Sigma{g}", 2, True,
        euler=2 - 2 * g,
        signature=None,
        algebra=algebra,
        w=None,
        p1=P1Data.zero_class(),
        torsion_free=True,
    )


def nonorientable_surface(k: int) -> Manifold:
    """N(k), k >= 1: connected sum of k copies of RP(2); chi = 2 - k."""
    if k < 1:
        raise ValueError("a non-orientable surface needs k >= 1")
    algebra = build_algebra(
        2,
        [["1"], [f"c{i}" for i in range(1, k + 1)], ["t"]],
        {(1, 1): np.eye(k, dtype=np.uint8).reshape(k, k, 1)},
        {(1, 1): np.ones((k, 1), dtype=np.uint8)},
    )
    return _assemble(
        f"N{k}", 2, False,
        euler=2 - k,
        signature=None,
        algebra=algebra,
        w=None,
        p1=P1Data.zero_class(),
    )


def point() -> Manifold:
    """A single point; the unit for products."""
    algebra = build_algebra(0, [["1"]])
    return _assemble(
        "point", 0, True, 1, 1, algebra,
        w=None, p1=P1Data.zero_class(), stably_parallelizable=True, torsion_free=True,
    )


_ATOM_FAMILIES = {
    "S": (sphere, 0),
    "RP": (real_projective, 1),
    "CP": (complex_projective, 1),
    "Sigma": (orientable_surface, 0),
    "N": (nonorientable_surface, 1),
}


def atom(token: str) -> Manifold:
    """Build a catalog atom from its token, e.g. ``"RP4"`` or ``"CP2~"``."""
    if token == "K3":
        return k3()
    if token == "CP2~":
        return cp2_reversed()
    for prefix, (factory, lowest) in sorted(
        _ATOM_FAMILIES.items(), key=lambda kv: -len(kv[0])
    ):
        if token.startswith(prefix) and token[len(prefix) :].isdigit():
            value = int(token[len(prefix) :])
            if value < lowest:
                raise ValueError(f"{prefix}({value}) is out of range (needs >= {lowest})")
            return factory(value)
    raise ValueError(f"unknown atom {token!r}")


# ---------------------------------------------------------------------------
# combinations
# ---------------------------------------------------------------------------


def _p1_status(p: P1Data, note: str) -> P1Data:
    if p.is_known_zero:
        return P1Data.zero_class(note)
    if p.is_known_nonzero:
        return P1Data.nonzero_class(note)
    return P1Data.unknown(note)


def _p1_from_w2sq(w: TotalClass) -> P1Data:
    """Exact p_1 status of a non-orientable 4-manifold: p_1 reduces to w_2^2.

    The mod-2 reduction is injective on the degree-4 integral group there,
    so the reduction decides the class.
    """
    w2 = w.component(2)
    if (w2 * w2).is_zero():
        return P1Data.zero_class("w_2^2 = 0")
    return P1Data.nonzero_class("w_2^2 != 0")


def connected_sum(m: Manifold, n: Manifold) -> Manifold:
    """Connected sum; both records must be closed, connected, equal-dimensional."""
    if m.dim != n.dim:
        raise DimensionMismatch(f"cannot sum dimensions {m.dim} and {n.dim}")
    algebra = connected_sum_algebra(m.algebra, n.algebra)
    dim = m.dim
    orientable = m.orientable and n.orientable
    euler = m.euler + n.euler - (2 if dim % 2 == 0 else 0)
    if orientable and dim % 4 == 0:
        signature: int | None = (m.signature or 0) + (n.signature or 0)
    else:
        signature = None
    w = total_sq(wu_total(algebra))

    if dim <= 3:
        p1 = P1Data.zero_class()
    elif dim == 4:
        if orientable:
            p1 = P1Data.integer(3 * signature, "signature additivity")
        else:
            p1 = _p1_from_w2sq(w)
    else:
        p1 = p1_add(m.p1, n.p1)

    if dim >= 4:
        if m.w3_twisted.is_nonzero or n.w3_twisted.is_nonzero:
            w3_stored = TriState.nonzero("nonzero in one summand")
        elif m.w3_twisted.is_zero and n.w3_twisted.is_zero:
            w3_stored = TriState.zero("zero in both summands")
        else:
            w3_stored = None
    else:
        w3_stored = None

    return _assemble(
        f"{m.name} # {n.name}", dim, orientable, euler, signature, algebra,
        w=w,
        p1=p1,
        w3_stored=w3_stored,
        stably_parallelizable=m.stably_parallelizable and n.stably_parallelizable,
        torsion_free=m.torsion_free and n.torsion_free and (orientable or dim > 4),
    )


def _factor_name(m: Manifold) -> str:
    return f"({m.name})" if " # " in m.name else m.name


def product(m: Manifold, n: Manifold) -> Manifold:
    """Cartesian product via the Kunneth algebra."""
    algebra = kunneth(m.algebra, n.algebra)
    dim = m.dim + n.dim
    orientable = m.orientable and n.orientable
    euler = m.euler * n.euler
    if orientable and dim % 4 == 0:
        if m.dim % 4 == 0 and n.dim % 4 == 0:
            signature: int | None = (m.signature or 0) * (n.signature or 0)
        else:
            signature = 0
    else:
        signature = None
    w = cross_total(algebra, m.w, n.w)

    if dim <= 3:
        p1 = P1Data.zero_class()
    elif dim == 4:
        if orientable:
            p1 = P1Data.integer(3 * signature, "signature theorem")
        else:
            p1 = _p1_from_w2sq(w)
    elif n.stably_parallelizable:
        p1 = _p1_status(m.p1, "stable tangent bundle pulled back from the first factor")
    elif m.stably_parallelizable:
        p1 = _p1_status(n.p1, "stable tangent bundle pulled back from the second factor")
    else:
        w2 = w.component(2)
        if not (w2 * w2).is_zero():
            p1 = P1Data.nonzero_class("w_2^2 != 0")
        elif m.p1.is_known_nonzero or n.p1.is_known_nonzero:
            p1 = P1Data.nonzero_class("nonzero on a factor")
        elif (
            m.p1.is_known_zero
            and n.p1.is_known_zero
            and m.torsion_free
            and n.torsion_free
        ):
            p1 = P1Data.zero_class("both factors vanish, no torsion in range")
        else:
            p1 = P1Data.unknown("integral cross terms undetermined")

    return _assemble(
        f"{_factor_name(m)} x {_factor_name(n)}", dim, orientable, euler, signature,
        algebra,
        w=w,
        p1=p1,
        stably_parallelizable=m.stably_parallelizable and n.stably_parallelizable,
        torsion_free=m.torsion_free and n.torsion_free and (orientable or dim > 4),
    )


# ---------------------------------------------------------------------------
# document ingestion
# ---------------------------------------------------------------------------

_DOCUMENT_FIELDS = {
    "name",
    "dim",
    "orientable",
    "euler",
    "signature",
    "basis",
    "mult",
    "sq",
    "w",
    "p1",
    "w3_twisted",
    "stably_parallelizable",
    "torsion_free",
}

_TRISTATE_WORDS = {"zero": TriState.zero, "nonzero": TriState.nonzero, "unknown": TriState.unknown}


def _require_int(doc: Mapping[str, Any], key: str) -> int:
    value = doc.get(key)
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError(f"field {key!r} must be an integer")
    return value


def _require_bool(doc: Mapping[str, Any], key: str, default: bool | None = None) -> bool:
    value = doc.get(key, default)
    if not isinstance(value, bool):
        raise SchemaError(f"field {key!r} must be a boolean")
    return value


def _coords(entry: Any, length: int, where: str) -> np.ndarray:
    if not isinstance(entry, (list, tuple)) or len(entry) != length:
        raise SchemaError(f"{where}: expected a 0/1 vector of length {length}")
    if any(c not in (0, 1) for c in entry):
        raise SchemaError(f"{where}: coordinates must be 0 or 1")
    return np.asarray(entry, dtype=np.uint8)


def _parse_p1(raw: Any) -> P1Data:
    if isinstance(raw, Mapping):
        if set(raw) != {"int"} or isinstance(raw["int"], bool) or not isinstance(raw["int"], int):
            raise SchemaError('p1 must be {"int": k} or one of "zero"/"nonzero"/"unknown"')
        return P1Data.integer(raw["int"], "document")
    if raw == "zero":
        return P1Data.zero_class("document")
    if raw == "nonzero":
        return P1Data.nonzero_class("document")
    if raw == "unknown":
        return P1Data.unknown("document")
    raise SchemaError('p1 must be {"int": k} or one of "zero"/"nonzero"/"unknown"')


def load_manifold(doc: Mapping[str, Any]) -> Manifold:
    """Build a validated manifold record from a document.

    The document carries the algebra (basis labels per degree, product and
    Steenrod tables as sparse entry lists), the classical invariants, a
    required p_1 status, and optional w / W_3 / flag data.  Multiplication
    entries may be given in either order; the mirror is filled in.  Every
    failure names the offending field or invariant.
    """
    if not isinstance(doc, Mapping):
        raise SchemaError("manifold document must be a mapping")
    unknown = set(doc) - _DOCUMENT_FIELDS
    if unknown:
        raise SchemaError(f"unknown document fields: {sorted(unknown)}")
    for key in ("dim", "orientable", "euler", "basis", "p1"):
        if key not in doc:
            raise SchemaError(f"missing required field {key!r}")

    dim = _require_int(doc, "dim")
    if dim < 0:
        raise SchemaError("dim must be >= 0")
    orientable = _require_bool(doc, "orientable")
    euler = _require_int(doc, "euler")
    signature = doc.get("signature")
    if signature is not None and (isinstance(signature, bool) or not isinstance(signature, int)):
        raise SchemaError("field 'signature' must be an integer")
    if signature == 0 and not (orientable and dim % 4 == 0):
        signature = None  # a vanishing signature is redundant off the 4k lattice

    basis = doc["basis"]
    if (
        not isinstance(basis, (list, tuple))
        or len(basis) != dim + 1
        or any(
            not isinstance(row, (list, tuple)) or any(not isinstance(l, str) for l in row)
            for row in basis
        )
    ):
        raise SchemaError("basis must list the labels for every degree 0..dim")
    if len(basis[0]) != 1 or len(basis[dim]) != 1:
        raise SchemaError("degrees 0 and dim must have exactly one basis label")
    ranks = [len(row) for row in basis]

    mult_tables: dict[tuple[int, int], np.ndarray] = {}
    for pos, entry in enumerate(doc.get("mult", [])):
        where = f"mult entry {pos}"
        if not isinstance(entry, (list, tuple)) or len(entry) != 5:
            raise SchemaError(f"{where}: expected [deg1, idx1, deg2, idx2, coords]")
        d1, i, d2, j, raw = entry
        for label, deg, idx in (("first", d1, i), ("second", d2, j)):
            if not isinstance(deg, int) or not 0 <= deg <= dim:
                raise SchemaError(f"{where}: {label} degree out of range")
            if not isinstance(idx, int) or not 0 <= idx < ranks[deg]:
                raise SchemaError(f"{where}: {label} index out of range")
        if d1 + d2 > dim:
            raise SchemaError(f"{where}: product degree {d1 + d2} exceeds dim")
        coords = _coords(raw, ranks[d1 + d2], where)
        for key, a, b in (((d1, d2), i, j), ((d2, d1), j, i)):
            block = mult_tables.setdefault(
                key, np.zeros((ranks[key[0]], ranks[key[1]], ranks[d1 + d2]), dtype=np.uint8)
            )
            if block[a, b].any() and not np.array_equal(block[a, b], coords):
                raise SchemaError(f"{where}: conflicts with an earlier entry")
            block[a, b] = coords

    sq_tables: dict[tuple[int, int], np.ndarray] = {}
    for pos, entry in enumerate(doc.get("sq", [])):
        where = f"sq entry {pos}"
        if not isinstance(entry, (list, tuple)) or len(entry) != 4:
            raise SchemaError(f"{where}: expected [k, deg, idx, coords]")
        k, d, i, raw = entry
        if not isinstance(k, int) or not isinstance(d, int) or not 0 <= d <= dim or k < 0:
            raise SchemaError(f"{where}: degree data out of range")
        if not isinstance(i, int) or not 0 <= i < ranks[d]:
            raise SchemaError(f"{where}: index out of range")
        if not isinstance(raw, (list, tuple)):
            raise SchemaError(f"{where}: expected [k, deg, idx, coords]")
        if k > d or d + k > dim:
            if any(raw):
                raise SchemaError(f"{where}: Sq^{k} vanishes on degree {d} here")
            continue
        coords = _coords(raw, ranks[d + k], where)
        block = sq_tables.setdefault(
            (k, d), np.zeros((ranks[d], ranks[d + k]), dtype=np.uint8)
        )
        block[i] = coords

    algebra = build_algebra(dim, [list(row) for row in basis], mult_tables, sq_tables)

    w_raw = doc.get("w")
    w = None
    if w_raw is not None:
        if not isinstance(w_raw, (list, tuple)) or len(w_raw) != dim + 1:
            raise SchemaError("w must list one coordinate vector per degree 0..dim")
        w = TotalClass(
            algebra,
            tuple(_coords(row, ranks[d], f"w[{d}]") for d, row in enumerate(w_raw)),
        )

    p1 = _parse_p1(doc["p1"])
    derived_w = w if w is not None else total_sq(wu_total(algebra))
    if dim <= 3:
        if not p1.is_known_nonzero:
            p1 = P1Data.zero_class("H^4 = 0")
    elif dim == 4 and orientable and signature is not None:
        exact = P1Data.integer(3 * signature, "signature theorem")
        if p1.is_unknown:
            p1 = exact
        elif p1.kind is not P1Kind.INTEGER:
            if p1.is_known_zero != exact.is_known_zero:
                raise InvariantViolation(
                    "p1-signature", f"document p1 contradicts 3 sigma = {3 * signature}"
                )
            p1 = exact
    elif dim == 4 and not orientable:
        exact = _p1_from_w2sq(derived_w)
        if p1.is_unknown:
            p1 = exact
        elif p1.kind is not P1Kind.INTEGER and p1.is_known_zero != exact.is_known_zero:
            raise InvariantViolation(
                "p1-reduction", "document p1 contradicts the w_2^2 reduction"
            )
        elif p1.kind is not P1Kind.INTEGER:
            p1 = exact

    w3_raw = doc.get("w3_twisted")
    if w3_raw is None:
        w3_stored = None
    elif w3_raw in _TRISTATE_WORDS:
        w3_stored = _TRISTATE_WORDS[w3_raw]("document")
    else:
        raise SchemaError('w3_twisted must be one of "zero"/"nonzero"/"unknown"')

    return _assemble(
        str(doc.get("name", "document")),
        dim,
        orientable,
        euler,
        signature,
        algebra,
        w=w,
        p1=p1,
        w3_stored=w3_stored,
        stably_parallelizable=_require_bool(doc, "stably_parallelizable", False),
        torsion_free=_require_bool(doc, "torsion_free", False),
    )
