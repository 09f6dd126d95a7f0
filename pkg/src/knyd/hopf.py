"""The Hopf algebra K_n = k^{Z_n x Z_n} x| kZ_2 for odd n >= 3.

Basis: p_{ij} (idempotents of the function algebra on Z_n x Z_n) and
f_{ij} = p_{ij} x^, for i, j in Z_n, so dim K_n = 2n^2.  Basis indices are
(kind, i, j) with kind P or F, indices reduced mod n.  Structure constants:

    p_{ij} p_{ij} = p_{ij}       p_{ij} f_{ij} = f_{ij}
    f_{ij} p_{ji} = f_{ij}       f_{ij} f_{ji} = p_{ij}

with all other products of basis elements zero, and

    Delta(p_{ij}) = sum_{i'+i''=i, j'+j''=j} p_{i'j'} (x) p_{i''j''}
    Delta(f_{ij}) = sum            xi^{i'j'' - j'i''} f_{i'j'} (x) f_{i''j''}
    eps(p_{ij}) = eps(f_{ij}) = delta_{i,0} delta_{j,0}
    S(p_{ij}) = p_{-i,-j}        S(f_{ij}) = f_{-j,-i}
"""

from __future__ import annotations

from functools import lru_cache

from .cyclotomic import CycNum, cyc, _field_data

P = 0
F = 1

_KIND_NAME = {P: "p", F: "f"}


class KnAlgebra:
    """Handle for K_n; carries n and the scalar field Q(xi_n)."""

    def __init__(self, n: int):
        _field_data(n)  # validates n odd >= 3
        self.n = n
        self.dim = 2 * n * n

    def xi(self, k: int) -> CycNum:
        return cyc(self.n, k)

    def scalar(self, value) -> CycNum:
        return CycNum.rational(self.n, value)

    def basis_indices(self):
        n = self.n
        for kind in (P, F):
            for i in range(n):
                for j in range(n):
                    yield (kind, i, j)

    def basis(self, kind: int, i: int, j: int) -> "KnElement":
        n = self.n
        return KnElement(self, {(kind, i % n, j % n): self.scalar(1)})

    def unit(self) -> "KnElement":
        """1 = sum_{ij} p_{ij}."""
        one = self.scalar(1)
        return KnElement(self, {(P, i, j): one
                                for i in range(self.n) for j in range(self.n)})

    def __eq__(self, other):
        return isinstance(other, KnAlgebra) and self.n == other.n

    def __hash__(self):
        return hash(("KnAlgebra", self.n))

    def __repr__(self):
        return "KnAlgebra(n=%d)" % self.n


class KnElement:
    """Sparse element of K_n: map (kind, i, j) -> CycNum, zeros pruned."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: KnAlgebra, coeffs: dict):
        self.algebra = algebra
        self.coeffs = {k: v for k, v in coeffs.items() if not v.is_zero()}

    def _check(self, other: "KnElement"):
        if self.algebra.n != other.algebra.n:
            raise ValueError("algebra mismatch")

    def __add__(self, other: "KnElement") -> "KnElement":
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = out.get(k)
            out[k] = v if s is None else s + v
        return KnElement(self.algebra, out)

    def __sub__(self, other: "KnElement") -> "KnElement":
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = out.get(k)
            out[k] = -v if s is None else s - v
        return KnElement(self.algebra, out)

    def __neg__(self) -> "KnElement":
        return KnElement(self.algebra, {k: -v for k, v in self.coeffs.items()})

    def scale(self, a: CycNum) -> "KnElement":
        return KnElement(self.algebra, {k: v * a for k, v in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, KnElement):
            return NotImplemented
        return self.algebra.n == other.algebra.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.algebra.n, frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for (kind, i, j), v in sorted(self.coeffs.items()):
            parts.append("(%r)*%s[%d,%d]" % (v, _KIND_NAME[kind], i, j))
        return " + ".join(parts)

    def __mul__(self, other: "KnElement") -> "KnElement":
        return multiply(self, other)


def _basis_product(k1, k2):
    """Product of two basis elements; returns the resulting basis key or
    None (product zero).  Coefficient is always 1."""
    kind1, i, j = k1
    kind2, a, b = k2
    if kind1 == P:
        if (a, b) != (i, j):
            return None
        return (P, i, j) if kind2 == P else (F, i, j)
    # kind1 == F: right factor must carry the swapped index (j, i)
    if (a, b) != (j, i):
        return None
    return (F, i, j) if kind2 == P else (P, i, j)


def multiply(x: KnElement, y: KnElement) -> KnElement:
    x._check(y)
    out: dict = {}
    ycoeffs = y.coeffs
    for (kind1, i, j), v in x.coeffs.items():
        # only two right-hand basis keys can meet a given left factor
        a, b = (i, j) if kind1 == P else (j, i)
        for kind2 in (P, F):
            w = ycoeffs.get((kind2, a, b))
            if w is None:
                continue
            key = (kind1 if kind2 == P else (F if kind1 == P else P), i, j)
            c = v * w
            s = out.get(key)
            out[key] = c if s is None else s + c
    return KnElement(x.algebra, out)


class TensorElement:
    """Sparse element of K_n (x) K_n: map (key1, key2) -> CycNum."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: KnAlgebra, coeffs: dict):
        self.algebra = algebra
        self.coeffs = {k: v for k, v in coeffs.items() if not v.is_zero()}

    def __add__(self, other: "TensorElement") -> "TensorElement":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = out.get(k)
            out[k] = v if s is None else s + v
        return TensorElement(self.algebra, out)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = out.get(k)
            out[k] = -v if s is None else s - v
        return TensorElement(self.algebra, out)

    def scale(self, a: CycNum) -> "TensorElement":
        return TensorElement(self.algebra, {k: v * a for k, v in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.algebra.n == other.algebra.n and self.coeffs == other.coeffs

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        """Componentwise algebra product on K_n (x) K_n."""
        out: dict = {}
        for (l1, r1), v in self.coeffs.items():
            for (l2, r2), w in other.coeffs.items():
                kl = _basis_product(l1, l2)
                if kl is None:
                    continue
                kr = _basis_product(r1, r2)
                if kr is None:
                    continue
                c = v * w
                s = out.get((kl, kr))
                out[(kl, kr)] = c if s is None else s + c
        return TensorElement(self.algebra, out)


def comultiply(x: KnElement) -> TensorElement:
    A = x.algebra
    n = A.n
    out: dict = {}
    for (kind, i, j), v in x.coeffs.items():
        if kind == P:
            for i1 in range(n):
                for j1 in range(n):
                    key = ((P, i1, j1), (P, (i - i1) % n, (j - j1) % n))
                    s = out.get(key)
                    out[key] = v if s is None else s + v
        else:
            for i1 in range(n):
                i2 = (i - i1) % n
                for j1 in range(n):
                    j2 = (j - j1) % n
                    c = v * A.xi(i1 * j2 - j1 * i2)
                    key = ((F, i1, j1), (F, i2, j2))
                    s = out.get(key)
                    out[key] = c if s is None else s + c
    return TensorElement(A, out)


def antipode(x: KnElement) -> KnElement:
    n = x.algebra.n
    out: dict = {}
    for (kind, i, j), v in x.coeffs.items():
        if kind == P:
            key = (P, (-i) % n, (-j) % n)
        else:
            key = (F, (-j) % n, (-i) % n)
        s = out.get(key)
        out[key] = v if s is None else s + v
    return KnElement(x.algebra, out)


def counit(x: KnElement) -> CycNum:
    acc = CycNum.zero(x.algebra.n)
    for (kind, i, j), v in x.coeffs.items():
        if i == 0 and j == 0:
            acc = acc + v
    return acc


def character(A: KnAlgebra, m: int, t: int) -> KnElement:
    """chi_{m,t} = sum_{ij} xi^{mi+tj} p_{ij} (the character a^i b^j -> xi^{mi+tj})."""
    return KnElement(A, {(P, i, j): A.xi(m * i + t * j)
                         for i in range(A.n) for j in range(A.n)})


def xhat(A: KnAlgebra) -> KnElement:
    """x^ = sum_{ij} f_{ij}."""
    one = A.scalar(1)
    return KnElement(A, {(F, i, j): one
                         for i in range(A.n) for j in range(A.n)})


def comatrix_element(A: KnAlgebra, k: int, l: int) -> KnElement:
    """e_{kl} = sum_s xi^{-2s(k+l)} f_{s+k-l, s-k+l}."""
    n = A.n
    out: dict = {}
    for s in range(n):
        key = (F, (s + k - l) % n, (s - k + l) % n)
        c = A.xi(-2 * s * (k + l))
        prev = out.get(key)
        out[key] = c if prev is None else prev + c
    return KnElement(A, out)


def adjoint_action(h: KnElement, z: KnElement) -> KnElement:
    """h -> z = h_(1) z S(h_(2)), computed via comultiply/multiply/antipode."""
    A = h.algebra
    acc = KnElement(A, {})
    for (k1, k2), v in comultiply(h).coeffs.items():
        left = KnElement(A, {k1: v})
        right = antipode(KnElement(A, {k2: A.scalar(1)}))
        acc = acc + multiply(multiply(left, z), right)
    return acc


# -- cached coproduct data (used heavily by the YD checker) --------------------


def delta_terms(A: KnAlgebra, key) -> list:
    """Delta of a basis element as a list of (key1, key2, CycNum)."""
    return _delta_cache(A.n)[key]


def delta2_index(A: KnAlgebra, key) -> dict:
    """Delta^2 of a basis element, indexed as {key1: [(key2, key3, coeff)]}.

    Delta^2(p_{ij}) has terms p (x) p (x) p over all splittings i1+i2+i3 = i,
    j1+j2+j3 = j; Delta^2(f_{ij}) carries the iterated twist
    xi^{i1(j2+j3) - j1(i2+i3)} xi^{i2 j3 - j2 i3}.
    """
    return _delta2_cache(A.n)[key]


@lru_cache(maxsize=None)
def _delta_cache(n: int):
    A = KnAlgebra(n)
    out = {}
    for key in A.basis_indices():
        terms = []
        for (k1, k2), v in comultiply(A.basis(*key)).coeffs.items():
            terms.append((k1, k2, v))
        out[key] = terms
    return out


@lru_cache(maxsize=None)
def _delta2_cache(n: int):
    A = KnAlgebra(n)
    out = {}
    for key in A.basis_indices():
        kind, i, j = key
        index: dict = {}
        for i1 in range(n):
            for j1 in range(n):
                bucket = index.setdefault((kind, i1, j1), [])
                for i2 in range(n):
                    i3 = (i - i1 - i2) % n
                    for j2 in range(n):
                        j3 = (j - j1 - j2) % n
                        if kind == P:
                            c = CycNum.one(n)
                        else:
                            c = cyc(n, i1 * (j2 + j3) - j1 * (i2 + i3)
                                    + i2 * j3 - j2 * i3)
                        bucket.append(((kind, i2, j2), (kind, i3, j3), c))
        out[key] = index
    return out


# -- axiom verification ---------------------------------------------------------


def verify_hopf_axioms(A: KnAlgebra, antipode_fn=None) -> dict:
    """Exhaustive Hopf-axiom audit over the basis.  Returns a report dict
    {axiom: {"ok": bool, "counterexample": ... or None}}.  An alternative
    antipode may be injected for negative-control tests."""
    S = antipode_fn if antipode_fn is not None else antipode
    n = A.n
    report = {}
    basis = list(A.basis_indices())
    one = A.unit()

    # associativity on basis triples
    ce = None
    for kx in basis:
        x = A.basis(*kx)
        for ky in basis:
            y = A.basis(*ky)
            xy = multiply(x, y)
            for kz in basis:
                z = A.basis(*kz)
                if multiply(xy, z) != multiply(x, multiply(y, z)):
                    ce = (kx, ky, kz)
                    break
            if ce:
                break
        if ce:
            break
    report["associativity"] = {"ok": ce is None, "counterexample": ce}

    # unit
    ce = None
    for kx in basis:
        x = A.basis(*kx)
        if multiply(one, x) != x or multiply(x, one) != x:
            ce = kx
            break
    report["unit"] = {"ok": ce is None, "counterexample": ce}

    # coassociativity: (Delta x id) Delta = (id x Delta) Delta
    ce = None
    for kx in basis:
        left: dict = {}
        right: dict = {}
        for (k1, k2, v) in delta_terms(A, kx):
            for (k11, k12, w) in delta_terms(A, k1):
                key = (k11, k12, k2)
                c = v * w
                s = left.get(key)
                left[key] = c if s is None else s + c
            for (k21, k22, w) in delta_terms(A, k2):
                key = (k1, k21, k22)
                c = v * w
                s = right.get(key)
                right[key] = c if s is None else s + c
        left = {k: v for k, v in left.items() if not v.is_zero()}
        right = {k: v for k, v in right.items() if not v.is_zero()}
        if left != right:
            ce = kx
            break
    report["coassociativity"] = {"ok": ce is None, "counterexample": ce}

    # counit laws
    ce = None
    for kx in basis:
        x = A.basis(*kx)
        lhs = KnElement(A, {})
        rhs = KnElement(A, {})
        for (k1, k2, v) in delta_terms(A, kx):
            lhs = lhs + A.basis(*k2).scale(v * counit(KnElement(A, {k1: A.scalar(1)})))
            rhs = rhs + A.basis(*k1).scale(v * counit(KnElement(A, {k2: A.scalar(1)})))
        if lhs != x or rhs != x:
            ce = kx
            break
    report["counit"] = {"ok": ce is None, "counterexample": ce}

    # Delta is an algebra map; Delta(1) acts as the unit of the image
    ce = None
    du = comultiply(one)
    for kx in basis:
        x = A.basis(*kx)
        dx = comultiply(x)
        if du * dx != dx:
            ce = ("unit", kx)
            break
        for ky in basis:
            y = A.basis(*ky)
            if comultiply(multiply(x, y)) != dx * comultiply(y):
                ce = (kx, ky)
                break
        if ce:
            break
    report["delta_multiplicative"] = {"ok": ce is None, "counterexample": ce}

    # eps is an algebra map
    ce = None
    if not counit(one).is_one():
        ce = "unit"
    else:
        for kx in basis:
            x = A.basis(*kx)
            for ky in basis:
                y = A.basis(*ky)
                if counit(multiply(x, y)) != counit(x) * counit(y):
                    ce = (kx, ky)
                    break
            if ce:
                break
    report["counit_multiplicative"] = {"ok": ce is None, "counterexample": ce}

    # antipode axiom: m(S x id)Delta = eps(.)1 = m(id x S)Delta
    ce = None
    for kx in basis:
        x = A.basis(*kx)
        target = one.scale(counit(x))
        lhs = KnElement(A, {})
        rhs = KnElement(A, {})
        for (k1, k2, v) in delta_terms(A, kx):
            e1 = KnElement(A, {k1: A.scalar(1)})
            e2 = KnElement(A, {k2: A.scalar(1)})
            lhs = lhs + multiply(S(e1), e2).scale(v)
            rhs = rhs + multiply(e1, S(e2)).scale(v)
        if lhs != target or rhs != target:
            ce = kx
            break
    report["antipode"] = {"ok": ce is None, "counterexample": ce}

    report["ok"] = all(v["ok"] for v in report.values() if isinstance(v, dict))
    return report
