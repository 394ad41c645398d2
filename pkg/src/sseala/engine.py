"""Sparse graded elements and bracket rules for the algebra families.

Elements are dicts mapping canonical basis symbols to nonzero rational
coefficients. A symbol is a triple (kind, aux, degree):

    ("gx", a, r)   simple-part generator a of sl2 (0=e, 1=h, 2=f) at degree r
    ("k0", i, 0)   degree-zero central generator K_i
    ("kz", i, r)   central K(e_i, r), r != 0, i != pivot(r)   (one-form quotient)
    ("kb", 0, r)   the single central line K(Br, r) of the skew family
    ("du", i, r)   derivation D(e_i, r); at r = 0 this is d_i in every family
    ("dz", i, r)   divergence-zero derivation D(pivot-pair basis vector, r)
    ("hb", 0, r)   the single derivation line h_r = D(Br, r) of the skew family

Each algebra owns its normal form; brackets always return canonicalized
elements, so degrees stay additive and enumeration rosters stay finite. The
simple part is fixed to sl2 with the trace form of the natural representation
(long root of square length 2).
"""

from __future__ import annotations

from .lattice import SkewForm, Vec, add_vec, pivot
from .scalars import ONE, Q, ZERO, qstr

Symbol = tuple[str, int, Vec]
Element = dict  # Symbol -> Q

GX_NAMES = ("e", "h", "f")

# [a, b] -> ((c, integer coefficient), ...); sl2 Chevalley relations
_STRUCT: dict[tuple[int, int], tuple[tuple[int, int], ...]] = {
    (0, 1): ((0, -2),),
    (1, 0): ((0, 2),),
    (0, 2): ((1, 1),),
    (2, 0): ((1, -1),),
    (1, 2): ((2, -2),),
    (2, 1): ((2, 2),),
}
# trace form of the natural sl2 representation
_GFORM: dict[tuple[int, int], int] = {(0, 2): 1, (2, 0): 1, (1, 1): 2}


def el_add(x: Element, y: Element) -> Element:
    out = dict(x)
    for k, c in y.items():
        s = out.get(k, ZERO) + c
        if s == 0:
            out.pop(k, None)
        else:
            out[k] = s
    return out


def el_scale(x: Element, a) -> Element:
    if a == 0:
        return {}
    return {k: a * c for k, c in x.items()}


def el_sub(x: Element, y: Element) -> Element:
    return el_add(x, el_scale(y, -ONE))


def _dot(u, v) -> Q:
    return sum((u[i] * v[i] for i in range(len(u))), ZERO)


def degree_of(x: Element) -> Vec | None:
    """Common degree of a homogeneous element, None for 0 or mixed."""
    degs = {sym[2] for sym in x}
    if len(degs) == 1:
        return next(iter(degs))
    return None


def render_symbol(alg: "Algebra", sym: Symbol) -> str:
    kind, aux, r = sym
    if kind == "gx":
        return f"X[{GX_NAMES[aux]};{tuple(r)}]"
    u = alg.symbol_u(sym)
    label = "K" if kind in ("k0", "kz", "kb") else "D"
    return f"{label}[({','.join(qstr(c) for c in u)});{tuple(r)}]"


def render_element(alg: "Algebra", x: Element) -> str:
    if not x:
        return "0"
    return " + ".join(f"{qstr(x[sym])}*{render_symbol(alg, sym)}" for sym in sorted(x))


class Algebra:
    """Base: bilinear bracket over a per-symbol-pair table with memoization."""

    name = "abstract"
    kinds: frozenset = frozenset()
    has_form = False
    has_derivations = False

    def __init__(self, n: int):
        self.N = n
        self.zero_deg: Vec = (0,) * n
        self._pair_memo: dict[tuple[Symbol, Symbol], Element] = {}

    # --- element constructors ---------------------------------------------

    def gx(self, a: int, r) -> Element:
        assert 0 <= a <= 2
        return {("gx", a, tuple(r)): ONE}

    def K(self, u, r) -> Element:
        return self._norm_K(tuple(Q(c) for c in u), tuple(r))

    def D(self, u, r) -> Element:
        if not self.has_derivations:
            raise ValueError(f"{self.name} has no derivation part")
        return self._norm_D(tuple(Q(c) for c in u), tuple(r))

    # --- per-algebra normal forms -------------------------------------------

    def _norm_K(self, u, m) -> Element:
        raise NotImplementedError

    def _norm_D(self, u, m) -> Element:
        raise ValueError(f"{self.name} has no derivation part")

    def symbol_u(self, sym: Symbol):
        """Displayed coefficient vector of a K/D symbol."""
        kind, aux, _ = sym
        if kind in ("k0", "kz", "du"):
            return tuple(ONE if i == aux else ZERO for i in range(self.N))
        raise ValueError(f"unknown symbol kind {kind!r} in {self.name}")

    # --- the bracket ----------------------------------------------------------

    def bracket_symbols(self, s: Symbol, t: Symbol) -> Element:
        key = (s, t)
        hit = self._pair_memo.get(key)
        if hit is None:
            hit = self._bracket_concrete(self._concrete(s), self._concrete(t))
            self._pair_memo[key] = hit
        return hit

    def bracket(self, x: Element, y: Element) -> Element:
        out: Element = {}
        for s, a in x.items():
            for t, b in y.items():
                for sym, c in self.bracket_symbols(s, t).items():
                    v = out.get(sym, ZERO) + a * b * c
                    if v == 0:
                        out.pop(sym, None)
                    else:
                        out[sym] = v
        return out

    def _concrete(self, sym: Symbol):
        """(family, payload, degree) with family in {g, K, D}; payload is the
        sl2 index or the rational coefficient vector."""
        kind, aux, r = sym
        if kind not in self.kinds:
            raise ValueError(f"symbol kind {kind!r} does not belong to {self.name}")
        if kind == "gx":
            return ("g", aux, r)
        if kind in ("k0", "kz", "kb"):
            return ("K", self.symbol_u(sym), r)
        return ("D", self.symbol_u(sym), r)

    def _dd_central_coeff(self, u, r, v, s) -> Q:
        """Coefficient of K(r, r+s) in [D(u,r), D(v,s)]; family-dependent."""
        raise NotImplementedError

    def _bracket_concrete(self, cs, ct) -> Element:
        fam_s, ps, r = cs
        fam_t, pt, s = ct
        m = add_vec(r, s)
        if fam_s == "K" or fam_t == "K":
            if fam_s == "D":  # [D(u,r), K(v,s)]
                out = el_scale(self._norm_K(pt, m), _dot(ps, s))
                return el_add(
                    out, el_scale(self._norm_K(tuple(Q(c) for c in r), m), _dot(ps, pt))
                )
            if fam_t == "D":  # [K(v,s), D(u,r)] = -[D(u,r), K(v,s)]
                out = el_scale(self._norm_K(ps, m), -_dot(pt, r))
                return el_add(
                    out, el_scale(self._norm_K(tuple(Q(c) for c in s), m), -_dot(pt, ps))
                )
            return {}  # K central against K and g
        if fam_s == "g" and fam_t == "g":
            out: Element = {}
            for c, coeff in _STRUCT.get((ps, pt), ()):
                out[("gx", c, m)] = Q(coeff)
            pair = _GFORM.get((ps, pt))
            if pair:
                out = el_add(out, el_scale(self._norm_K(tuple(Q(c) for c in r), m), Q(pair)))
            return out
        if fam_s == "D" and fam_t == "g":
            c = _dot(ps, s)
            return {("gx", pt, m): c} if c != 0 else {}
        if fam_s == "g" and fam_t == "D":
            c = -_dot(pt, r)
            return {("gx", ps, m): c} if c != 0 else {}
        # D with D
        a = _dot(ps, s)
        b = _dot(pt, r)
        w = tuple(a * pt[i] - b * ps[i] for i in range(self.N))
        out = self._norm_D(w, m)
        cc = self._dd_central_coeff(ps, r, pt, s)
        if cc != 0:
            out = el_add(out, el_scale(self._norm_K(tuple(Q(c) for c in r), m), cc))
        return out

    # --- checks -----------------------------------------------------------------

    def jacobi_check(self, x: Element, y: Element, z: Element):
        defect = self.bracket(x, self.bracket(y, z))
        defect = el_add(defect, self.bracket(y, self.bracket(z, x)))
        defect = el_add(defect, self.bracket(z, self.bracket(x, y)))
        return (not defect, defect)

    def form_symbols(self, s: Symbol, t: Symbol) -> Q:
        raise ValueError(f"{self.name} has no invariant form")

    def form(self, x: Element, y: Element) -> Q:
        if not self.has_form:
            raise ValueError(f"{self.name} has no invariant form")
        out = ZERO
        for s, a in x.items():
            for t, b in y.items():
                v = self.form_symbols(s, t)
                if v != 0:
                    out = out + a * b * v
        return out

    def ad_nilpotency_check(self, x: Element, y: Element, bound: int):
        """Smallest k <= bound with (ad x)^k y = 0, or None on failure."""
        cur = y
        for k in range(1, bound + 1):
            cur = self.bracket(x, cur)
            if not cur:
                return k
        return None

    # --- enumeration -------------------------------------------------------------

    def symbols_at(self, r) -> list[Symbol]:
        raise NotImplementedError

    def descriptor(self) -> dict:
        return {"family": self.name, "n": self.N}


class StandardFormMixin:
    """Invariant form shared by the families that have one: simple parts pair
    by the sl2 trace form at opposite degrees, K against D by (u|v) at
    opposite degrees, all other pairs zero."""

    has_form = True

    def form_symbols(self, s: Symbol, t: Symbol) -> Q:
        cs = self._concrete(s)
        ct = self._concrete(t)
        if add_vec(cs[2], ct[2]) != self.zero_deg:
            return ZERO
        if cs[0] == "g" and ct[0] == "g":
            return Q(_GFORM.get((cs[1], ct[1]), 0))
        if cs[0] == "D" and ct[0] == "K":
            return _dot(cs[1], ct[1])
        if cs[0] == "K" and ct[0] == "D":
            return _dot(cs[1], ct[1])
        return ZERO


class Toroidal(Algebra):
    """Simple part over the Laurent ring plus its universal center (one-forms
    modulo exact forms). No derivations."""

    name = "toroidal"
    kinds = frozenset({"gx", "k0", "kz"})

    def _norm_K(self, u, m) -> Element:
        if all(c == 0 for c in u):
            return {}
        if m == self.zero_deg:
            return {("k0", i, m): u[i] for i in range(self.N) if u[i] != 0}
        p = pivot(m)
        c = u[p] / m[p]
        out: Element = {}
        for i in range(self.N):
            if i == p:
                continue
            v = u[i] - c * m[i]
            if v != 0:
                out[("kz", i, m)] = v
        return out

    def symbols_at(self, r) -> list[Symbol]:
        r = tuple(r)
        syms: list[Symbol] = [("gx", a, r) for a in range(3)]
        if r == self.zero_deg:
            syms += [("k0", i, r) for i in range(self.N)]
        else:
            p = pivot(r)
            syms += [("kz", i, r) for i in range(self.N) if i != p]
        return syms


class FullToroidal(Toroidal):
    """Toroidal algebra extended by every derivation D(u, r), with the
    two-cocycle correction on derivation brackets. Carries no form."""

    name = "full-toroidal"
    kinds = frozenset({"gx", "k0", "kz", "du"})
    has_derivations = True

    def _norm_D(self, u, m) -> Element:
        return {("du", i, m): u[i] for i in range(self.N) if u[i] != 0}

    def _dd_central_coeff(self, u, r, v, s) -> Q:
        return -_dot(u, s) * _dot(v, r)

    def symbols_at(self, r) -> list[Symbol]:
        r = tuple(r)
        return super().symbols_at(r) + [("du", i, r) for i in range(self.N)]


class DivergenceZero(StandardFormMixin, Toroidal):
    """Toroidal algebra extended by divergence-free derivations only
    ((u|r) = 0), same cocycle. This subfamily carries the form."""

    name = "tauS"
    kinds = frozenset({"gx", "k0", "kz", "du", "dz"})
    has_derivations = True

    def _basis_vec(self, i: int, m: Vec):
        # pair basis: m_p e_i - m_i e_p, manifestly orthogonal to m
        p = pivot(m)
        assert i != p
        return tuple(
            Q(m[p]) if j == i else (Q(-m[i]) if j == p else ZERO) for j in range(self.N)
        )

    def _norm_D(self, u, m) -> Element:
        if all(c == 0 for c in u):
            return {}
        if m == self.zero_deg:
            return {("du", i, m): u[i] for i in range(self.N) if u[i] != 0}
        assert _dot(u, m) == 0, "derivation leaves the divergence-zero subalgebra"
        p = pivot(m)
        out: Element = {}
        for i in range(self.N):
            if i == p or u[i] == 0:
                continue
            out[("dz", i, m)] = u[i] / Q(m[p])
        return out

    def _dd_central_coeff(self, u, r, v, s) -> Q:
        return -_dot(u, s) * _dot(v, r)

    def symbol_u(self, sym: Symbol):
        if sym[0] == "dz":
            return self._basis_vec(sym[1], sym[2])
        return super().symbol_u(sym)

    def symbols_at(self, r) -> list[Symbol]:
        r = tuple(r)
        syms = super().symbols_at(r)
        if r == self.zero_deg:
            syms += [("du", i, r) for i in range(self.N)]
        else:
            p = pivot(r)
            syms += [("dz", i, r) for i in range(self.N) if i != p]
        return syms


class SkewAlgebra(StandardFormMixin, Algebra):
    """The family built from a skew form B: simple part over the Laurent
    ring, one central line K(Br, r) per degree outside the radical of B,
    and the derivation lines h_r = D(Br, r) plus the degree-zero d_i.

    Derivation brackets use the plain witness rule with no central
    correction: [D(u,r), D(v,s)] = D((u|s)v - (v|r)u, r+s), which on the
    h lines gives [h_r, h_s] = (Br|s) h_{r+s}.
    """

    name = "tauB"
    kinds = frozenset({"gx", "k0", "kb", "du", "hb"})
    has_derivations = True

    def __init__(self, ctx: SkewForm):
        super().__init__(ctx.N)
        self.ctx = ctx
        self._bcache: dict[Vec, tuple] = {}

    def B_of(self, r) -> tuple:
        r = tuple(r)
        hit = self._bcache.get(r)
        if hit is None:
            hit = self.ctx.apply(r)
            self._bcache[r] = hit
        return hit

    def in_radical(self, r) -> bool:
        return all(c == 0 for c in self.B_of(r))

    def h(self, r) -> Element:
        r = tuple(r)
        if self.in_radical(r):
            raise ValueError("h_r needs r outside the radical")
        return {("hb", 0, r): ONE}

    def _norm_K(self, u, m) -> Element:
        if all(c == 0 for c in u):
            return {}
        if m == self.zero_deg:
            return {("k0", i, m): u[i] for i in range(self.N) if u[i] != 0}
        bm = self.B_of(m)
        if all(c == 0 for c in bm):
            return {}
        bu = self.ctx.apply(u)
        num = _dot(bu, m)
        if num == 0:
            return {}
        return {("kb", 0, m): -num / _dot(bm, bm)}

    def _norm_D(self, u, m) -> Element:
        if all(c == 0 for c in u):
            return {}
        if m == self.zero_deg:
            return {("du", i, m): u[i] for i in range(self.N) if u[i] != 0}
        bm = self.B_of(m)
        if all(c == 0 for c in bm):
            assert all(c == 0 for c in u), "no derivation line inside the radical"
            return {}
        j = next(i for i in range(self.N) if bm[i] != 0)
        c = u[j] / bm[j]
        assert all(u[i] == c * bm[i] for i in range(self.N)), "derivation must lie on the h line"
        return {("hb", 0, m): c} if c != 0 else {}

    def _dd_central_coeff(self, u, r, v, s) -> Q:
        return ZERO

    def symbol_u(self, sym: Symbol):
        kind, _, r = sym
        if kind in ("kb", "hb"):
            return self.B_of(r)
        return super().symbol_u(sym)

    def symbols_at(self, r) -> list[Symbol]:
        r = tuple(r)
        syms: list[Symbol] = [("gx", a, r) for a in range(3)]
        if r == self.zero_deg:
            syms += [("k0", i, r) for i in range(self.N)]
            syms += [("du", i, r) for i in range(self.N)]
        elif not self.in_radical(r):
            syms += [("kb", 0, r), ("hb", 0, r)]
        return syms

    def descriptor(self) -> dict:
        return {"family": self.name, "n": self.N, "matrix": self.ctx.describe()}
