"""Principal ideals, direct products and the chain decomposition of finite MV-algebras."""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from mvkit.algebra import (
    AlgebraError,
    FiniteMVAlgebra,
    derive_order,
    find_isomorphism,
    is_mv_isomorphism,
    require_mv,
    verify_mv_axioms,
)
from mvkit.chains import make_chain


def principal_ideal(a: FiniteMVAlgebra, b: int) -> FiniteMVAlgebra:
    """The MV-algebra on ``{z : z <= b}`` for an idempotent ``b``.

    Addition is inherited and the negation is relativised to ``z -> b meet neg(z)``.
    """
    order = derive_order(a)
    if b not in order.booleans:
        raise AlgebraError(
            f"{a.name(b)!r} is not idempotent ({a.name(b)} + {a.name(b)} = "
            f"{a.name(a.add(b, b))}); principal ideals need a Boolean generator"
        )
    carrier = order.down(b)
    pos = {z: i for i, z in enumerate(carrier)}
    oplus = []
    for z in carrier:
        row = []
        for w in carrier:
            s = a.add(z, w)
            if s not in pos:
                raise AssertionError(f"ideal of {a.name(b)!r} not closed: {a.name(z)} + {a.name(w)}")
            row.append(pos[s])
        oplus.append(row)
    neg = [pos[int(order.meet[b, a.neg[z]])] for z in carrier]
    ideal = FiniteMVAlgebra(a.names(carrier), pos[a.zero], oplus, neg)
    if not verify_mv_axioms(ideal).passed:
        raise AssertionError(f"ideal of {a.name(b)!r} is not an MV-algebra")
    return ideal


def product(a: FiniteMVAlgebra, b: FiniteMVAlgebra) -> FiniteMVAlgebra:
    """Componentwise product; pair ``(i, j)`` sits at index ``i * len(b) + j``."""
    na, nb = a.n, b.n
    names = [f"{x},{y}" for x in a.elements for y in b.elements]
    oplus = (a.oplus[:, None, :, None] * nb + b.oplus[None, :, None, :]).reshape(na * nb, na * nb)
    neg = (a.neg[:, None] * nb + b.neg[None, :]).reshape(-1)
    return FiniteMVAlgebra(names, a.zero * nb + b.zero, oplus, neg)


def product_of(algebras) -> FiniteMVAlgebra:
    algebras = list(algebras)
    if not algebras:
        return make_chain(1)
    return reduce(product, algebras)


def chain_product(shape) -> FiniteMVAlgebra:
    return product_of(make_chain(c) for c in shape)


@dataclass(frozen=True)
class Decomposition:
    source: FiniteMVAlgebra
    atoms: tuple[int, ...]
    factors: tuple[FiniteMVAlgebra, ...]
    iso: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> list[int]:
        return sorted(f.n for f in self.factors)

    def product_algebra(self) -> FiniteMVAlgebra:
        return product_of(self.factors)

    def flat_map(self) -> list[int]:
        """Index of each source element inside :meth:`product_algebra`."""
        out = []
        for parts in self.iso:
            flat = 0
            for factor, z in zip(self.factors, parts):
                flat = flat * factor.n + factor.index(self.source.name(z))
            out.append(flat)
        return out

    def report(self) -> str:
        a = self.source
        lines = [
            "atoms: " + " ".join(a.names(self.atoms)),
            "factor sizes: " + " ".join(str(f.n) for f in self.factors),
        ]
        for atom, factor in zip(self.atoms, self.factors):
            lines.append(f"ideal {a.name(atom)}: " + " ".join(factor.elements))
        lines.append("iso:")
        for x, parts in enumerate(self.iso):
            lines.append(f"{a.name(x)} -> ({', '.join(a.names(parts))})")
        return "\n".join(lines) + "\n"


def boolean_atoms(a: FiniteMVAlgebra) -> list[int]:
    """Minimal nonzero idempotents, ordered by ideal size then index."""
    order = derive_order(a)
    nonzero = [b for b in order.booleans if b != a.zero]
    atoms = [
        b for b in nonzero
        if not any(c != b and order.leq[c, b] for c in nonzero)
    ]
    return sorted(atoms, key=lambda b: (int(order.height[b]), b))


def decompose(a: FiniteMVAlgebra) -> Decomposition:
    require_mv(a)
    order = derive_order(a)
    atoms = boolean_atoms(a) or [a.one]
    for i, p in enumerate(atoms):
        for q in atoms[i + 1:]:
            if order.meet[p, q] != a.zero:
                raise AssertionError("distinct atoms must meet in zero")
    if reduce(lambda u, v: int(order.join[u, v]), atoms) != a.one:
        raise AssertionError("atoms must join to one")
    factors = tuple(principal_ideal(a, p) for p in atoms)
    for p, factor in zip(atoms, factors):
        if not derive_order(factor).is_total:
            raise AssertionError(f"ideal of atom {a.name(p)!r} is not a chain")
    iso = tuple(tuple(int(order.meet[x, p]) for p in atoms) for x in range(a.n))
    dec = Decomposition(a, tuple(atoms), factors, iso)
    if not is_mv_isomorphism(a, dec.product_algebra(), dec.flat_map()):
        raise AssertionError("x -> (x meet atom_i) is not an isomorphism onto the product")
    return dec


def shape_of(a: FiniteMVAlgebra) -> list[int]:
    return decompose(a).shape


def factorizations(n: int, smallest: int = 2) -> list[list[int]]:
    """Multisets of integers ``>= smallest`` with product ``n``, each ascending."""
    out = []
    if n == 1:
        return [[]]
    for d in range(smallest, n + 1):
        if n % d == 0:
            out.extend([d, *rest] for rest in factorizations(n // d, d))
    return out


def mv_shapes(n: int) -> list[list[int]]:
    """Chain-size multisets of the MV-algebras of order ``n``, largest factor first."""
    if n < 1:
        raise AlgebraError("order must be positive")
    if n == 1:
        return [[1]]
    return sorted(factorizations(n), key=lambda s: sorted(s, reverse=True), reverse=True)


def enumerate_mv_algebras(n: int, check: bool = True) -> list[FiniteMVAlgebra]:
    """One representative per isomorphism class of MV-algebras of order ``n``."""
    reps = [chain_product(shape) for shape in mv_shapes(n)]
    if check:
        for i, x in enumerate(reps):
            for y in reps[i + 1:]:
                if find_isomorphism(x, y) is not None:
                    raise AssertionError("enumerated representatives are isomorphic")
    return reps


def proper_idempotent_count(a: FiniteMVAlgebra) -> int:
    if a.n < 2:
        return 0
    return len(derive_order(a).booleans) - 2


__all__ = [
    "Decomposition",
    "boolean_atoms",
    "chain_product",
    "decompose",
    "enumerate_mv_algebras",
    "factorizations",
    "mv_shapes",
    "principal_ideal",
    "product",
    "product_of",
    "proper_idempotent_count",
    "shape_of",
]
