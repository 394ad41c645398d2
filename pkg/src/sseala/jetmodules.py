"""Finite symplectic and sl2 modules, jet towers, and the level-zero tensor module.

The degree-zero reduction algebra acts on a finite module through its
symplectic realisation; a jet tower extends that action over the Laurent
degrees together with translation operators, and the level-zero tensor
module couples an sl2 highest-weight factor to such a tower with every
central line acting as zero. All actions are exact rational matrices and
all suite checks compare both sides of an identity literally.
"""

from __future__ import annotations

from .algebras import random_symbol
from .engine import Element, SkewAlgebra, Symbol, render_symbol
from .filtration import (bracket as reduction_bracket, gen,
                         random_element as random_reduction_element,
                         sp_kernel_basis, sp_matrix)
from .lattice import SkewForm, Vec, add_vec, box, neg_vec, pairing, std_J
from .laurent import multi_indices
from .linalg import identity, mat_eq, mat_vec, matmul
from .report import record
from .sampling import Stream
from .scalars import ONE, Q, ZERO, qstr

SUITE = "jet"
HW_SUITE = "highest-weight"

Matrix = list[list]


# -- matrix helpers ------------------------------------------------------------

def zero_matrix(rows: int, cols: int | None = None) -> Matrix:
    return [[ZERO] * (rows if cols is None else cols) for _ in range(rows)]


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Matrix, c) -> Matrix:
    return [[c * x for x in row] for row in a]


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return mat_sub(matmul(a, b), matmul(b, a))


def _unit_matrix(n: int, i: int, j: int) -> Matrix:
    out = zero_matrix(n)
    out[i][j] = ONE
    return out


# -- sl2 highest-weight modules --------------------------------------------------

class Sl2Module:
    """Irreducible sl2 module with highest weight mu; basis vector j carries
    h-eigenvalue mu - 2j, e moves j down with coefficient j(mu - j + 1), f
    moves j up with coefficient 1. The defining commutators are verified at
    construction."""

    __slots__ = ("mu", "dim", "e", "h", "f", "weights")

    def __init__(self, mu: int):
        if mu < 0:
            raise ValueError("highest weight must be a non-negative integer")
        self.mu = mu
        d = mu + 1
        self.dim = d
        e = zero_matrix(d)
        h = zero_matrix(d)
        f = zero_matrix(d)
        for j in range(d):
            h[j][j] = Q(mu - 2 * j)
            if j:
                e[j - 1][j] = Q(j * (mu - j + 1))
            if j < mu:
                f[j + 1][j] = ONE
        self.e, self.h, self.f = e, h, f
        self.weights = tuple(mu - 2 * j for j in range(d))
        assert mat_eq(commutator(e, f), h)
        assert mat_eq(commutator(h, e), mat_scale(e, Q(2)))
        assert mat_eq(commutator(h, f), mat_scale(f, Q(-2)))

    def action(self, a: int) -> Matrix:
        """Matrix of the generator with roster index a (0=e, 1=h, 2=f)."""
        return (self.e, self.h, self.f)[a]


def sl2_irrep(mu: int) -> Sl2Module:
    return Sl2Module(mu)


# -- symplectic matrices and symmetric powers -------------------------------------

def sp_basis(m: int) -> list[Matrix]:
    """Standard basis of the matrices X with X^T B + B X = 0 for the block
    form B = [[0, I], [-I, 0]]: the gl_m block pairs plus one generator per
    unordered index pair in each off-diagonal symmetric block."""
    if m < 1:
        raise ValueError("block size must be at least 1")
    n = 2 * m
    out: list[Matrix] = []
    for i in range(m):
        for j in range(m):
            out.append(mat_sub(_unit_matrix(n, i, j), _unit_matrix(n, m + j, m + i)))
    for i in range(m):
        for j in range(i, m):
            top = _unit_matrix(n, i, m + j)
            out.append(top if i == j else mat_add(top, _unit_matrix(n, j, m + i)))
    for i in range(m):
        for j in range(i, m):
            low = _unit_matrix(n, m + i, j)
            out.append(low if i == j else mat_add(low, _unit_matrix(n, m + j, i)))
    return out


class SymmetricPower:
    """k-th symmetric power of the natural 2m-dimensional symplectic module.

    Basis monomials are the degree-k exponent tuples in coordinate-lex
    order, and a 2m x 2m matrix acts as the derivation extending its column
    action on the variables. The induced map is verified to respect
    commutators on the standard symplectic basis at construction.
    """

    __slots__ = ("m", "k", "n", "dim", "basis", "_index")

    def __init__(self, m: int, k: int):
        if m < 1:
            raise ValueError("block size must be at least 1")
        if k < 0:
            raise ValueError("symmetric power degree must be non-negative")
        self.m = m
        self.k = k
        self.n = 2 * m
        self.basis: tuple[Vec, ...] = tuple(multi_indices(k, self.n))
        self._index = {a: i for i, a in enumerate(self.basis)}
        self.dim = len(self.basis)
        gens = sp_basis(m)
        mats = [self.matrix(x) for x in gens]
        for i, (x, sx) in enumerate(zip(gens, mats)):
            for y, sy in zip(gens[i + 1:], mats[i + 1:]):
                assert mat_eq(self.matrix(commutator(x, y)), commutator(sx, sy))

    def matrix(self, mat: Matrix) -> Matrix:
        """Derivation action of mat on the degree-k monomial basis."""
        out = zero_matrix(self.dim)
        for col, alpha in enumerate(self.basis):
            for j, aj in enumerate(alpha):
                if not aj:
                    continue
                down = list(alpha)
                down[j] -= 1
                for i in range(self.n):
                    c = mat[i][j]
                    if not c:
                        continue
                    down[i] += 1
                    out[self._index[tuple(down)]][col] += Q(aj) * c
                    down[i] -= 1
        return out


def sp_irrep(m: int, k: int) -> SymmetricPower:
    return SymmetricPower(m, k)


# -- reduction-algebra action through the realisation ------------------------------

class ReductionAction:
    """Action of the degree-zero reduction algebra on a finite module via the
    symplectic realisation. The optional twist adds scalar * coefficient-sum
    times the identity; the coefficient-sum functional restricts to a linear
    functional on the realisation kernel, but it does not vanish on brackets,
    so only twist zero yields a genuine module. The twist exists to probe
    that one-sided freedom."""

    __slots__ = ("ctx", "space", "twist", "dim", "_tcache")

    def __init__(self, ctx: SkewForm, space: SymmetricPower, twist=ZERO):
        if ctx.is_degenerate():
            raise ValueError("reduction action needs a nondegenerate form")
        if space.n != ctx.N:
            raise ValueError("module rank must match the form size")
        self.ctx = ctx
        self.space = space
        self.twist = Q(twist)
        self.dim = space.dim
        self._tcache: dict[Vec, Matrix] = {}

    def matrix(self, x: dict) -> Matrix:
        out = self.space.matrix(sp_matrix(self.ctx, x))
        if self.twist:
            tot = sum(x.values(), ZERO)
            if tot:
                out = mat_add(out, mat_scale(identity(self.dim), self.twist * tot))
        return out

    def t_matrix(self, r) -> Matrix:
        r = tuple(r)
        hit = self._tcache.get(r)
        if hit is None:
            hit = self.matrix(gen(r))
            self._tcache[r] = hit
        return hit


def t_module_from_rep(ctx: SkewForm, space: SymmetricPower, kernel_scalar=ZERO) -> ReductionAction:
    return ReductionAction(ctx, space, kernel_scalar)


# -- jet towers -------------------------------------------------------------------

class JetVector:
    """Finite tower of module vectors indexed by lattice degree, carrying the
    rational degree shift used by the derivation action. Zero vectors are
    dropped on construction."""

    __slots__ = ("beta", "terms")

    def __init__(self, beta, terms: dict):
        self.beta = tuple(Q(c) for c in beta)
        clean: dict[Vec, tuple] = {}
        for k, v in terms.items():
            vec = tuple(Q(c) for c in v)
            if any(vec):
                clean[tuple(k)] = vec
        self.terms = clean

    def __eq__(self, other) -> bool:
        return (isinstance(other, JetVector) and self.beta == other.beta
                and self.terms == other.terms)

    def __repr__(self) -> str:
        return f"JetVector(beta={self.beta!r}, terms={self.terms!r})"


def jv_add(x: JetVector, y: JetVector) -> JetVector:
    assert x.beta == y.beta, "jet vectors must share the degree shift"
    out = {k: list(v) for k, v in x.terms.items()}
    for k, v in y.terms.items():
        cur = out.get(k)
        if cur is None:
            out[k] = list(v)
        else:
            for i, c in enumerate(v):
                cur[i] += c
    return JetVector(x.beta, out)


def jv_scale(x: JetVector, a) -> JetVector:
    if not a:
        return JetVector(x.beta, {})
    return JetVector(x.beta, {k: [a * c for c in v] for k, v in x.terms.items()})


def jv_sub(x: JetVector, y: JetVector) -> JetVector:
    return jv_add(x, jv_scale(y, -ONE))


def jv_render(x: JetVector) -> dict:
    return {str(k): [qstr(c) for c in v] for k, v in sorted(x.terms.items())}


def jet_action(mod: ReductionAction, gen_sym: tuple, w: JetVector) -> JetVector:
    """Exact action of one jet generator on a tower vector.

    Generators: ("t", r) translates every degree by r; ("d", r) is the
    derivation line at degree r, acting by the (Br | k+beta) scalar plus the
    reduction action of the degree-r generator; ("d0", u) is the degree-zero
    derivation with eigenvalue (u | k+beta) on each slice.
    """
    kind, arg = gen_sym
    n = mod.ctx.N
    out: dict[Vec, list] = {}

    def bump(key: Vec, vec) -> None:
        cur = out.get(key)
        if cur is None:
            out[key] = list(vec)
        else:
            for i, c in enumerate(vec):
                cur[i] += c

    if kind == "t":
        r = tuple(arg)
        for k, v in w.terms.items():
            bump(add_vec(k, r), v)
    elif kind == "d":
        r = tuple(arg)
        if any(r):
            br = mod.ctx.apply(r)
            tm = mod.t_matrix(r)
            for k, v in w.terms.items():
                scal = sum((br[i] * (k[i] + w.beta[i]) for i in range(n)), ZERO)
                img = mat_vec(tm, v)
                bump(add_vec(k, r), [scal * v[i] + img[i] for i in range(len(v))])
    elif kind == "d0":
        u = tuple(Q(c) for c in arg)
        for k, v in w.terms.items():
            scal = sum((u[i] * (k[i] + w.beta[i]) for i in range(n)), ZERO)
            if scal:
                bump(k, [scal * c for c in v])
    else:
        raise ValueError(f"unknown jet generator kind {kind!r}")
    return JetVector(w.beta, out)


def random_jet_vector(mod: ReductionAction, beta, stream: Stream,
                      radius: int = 2, terms: int = 2) -> JetVector:
    while True:
        data: dict[Vec, list] = {}
        for _ in range(terms):
            k = stream.vec(mod.ctx.N, radius)
            v = list(stream.qvec(mod.dim))
            cur = data.get(k)
            if cur is None:
                data[k] = v
            else:
                for i, c in enumerate(v):
                    cur[i] += c
        w = JetVector(beta, data)
        if w.terms:
            return w


# -- suite plumbing ----------------------------------------------------------------

def _sampled(out: list, suite: str, check: str, samples: int, fn,
             annotation=None, extra=None) -> None:
    """Run fn over sample indices until it reports a counterexample."""
    bad = None
    for idx in range(samples):
        bad = fn(idx)
        if bad is not None:
            break
    value = None if bad else {"tuples": samples, **(extra or {})}
    out.append(record(suite, check, "fail" if bad else "pass", value=value,
                      annotation=annotation, counterexample=bad))


def _mat_render(a: Matrix) -> list:
    return [[qstr(c) for c in row] for row in a]


# -- jet verification ---------------------------------------------------------------

def rep_property_check(mod: ReductionAction, samples: int, seed: int,
                       beta=None, radius: int = 3) -> list[dict]:
    """Bracket compatibility of the jet action: the commutator of two
    derivation lines equals (Br|s) times the line at r+s, and the commutator
    of a derivation line with a translation equals (Br|s) times the
    translation at r+s. Exact on every sampled tuple."""
    n = mod.ctx.N
    if beta is None:
        beta = (ZERO,) * n
    beta = tuple(Q(c) for c in beta)
    out: list[dict] = []
    root = Stream(seed, f"jet/rep/n{n}/k{mod.space.k}")

    st1 = root.substream("derivation-derivation")

    def chk_dd(idx: int):
        r = st1.vec(n, radius, nonzero=True)
        s = st1.vec(n, radius, nonzero=True)
        w = random_jet_vector(mod, beta, st1)
        lhs = jv_sub(jet_action(mod, ("d", r), jet_action(mod, ("d", s), w)),
                     jet_action(mod, ("d", s), jet_action(mod, ("d", r), w)))
        rhs = jv_scale(jet_action(mod, ("d", add_vec(r, s)), w), pairing(mod.ctx, r, s))
        if lhs != rhs:
            return {"r": r, "s": s, "input": jv_render(w),
                    "commutator": jv_render(lhs), "expected": jv_render(rhs)}
        return None

    _sampled(out, SUITE, "derivation-derivation-bracket", samples, chk_dd)

    st2 = root.substream("derivation-translation")

    def chk_dt(idx: int):
        r = st2.vec(n, radius, nonzero=True)
        s = st2.vec(n, radius, nonzero=True)
        w = random_jet_vector(mod, beta, st2)
        lhs = jv_sub(jet_action(mod, ("d", r), jet_action(mod, ("t", s), w)),
                     jet_action(mod, ("t", s), jet_action(mod, ("d", r), w)))
        rhs = jv_scale(jet_action(mod, ("t", add_vec(r, s)), w), pairing(mod.ctx, r, s))
        if lhs != rhs:
            return {"r": r, "s": s, "input": jv_render(w),
                    "commutator": jv_render(lhs), "expected": jv_render(rhs)}
        return None

    _sampled(out, SUITE, "derivation-translation-bracket", samples, chk_dt)
    return out


def jet_suite(m: int, k: int, beta, samples: int, seed: int) -> list[dict]:
    """Full jet-tower suite for the block form of size 2m acting on the k-th
    symmetric power: bracket compatibility, associativity and identity of the
    translations, degree-derivation brackets, matrix realisation of the
    reduction bracket, kernel elements acting as zero, and bijectivity of
    translations between degree slices."""
    ctx = std_J(m)
    mod = t_module_from_rep(ctx, sp_irrep(m, k))
    n = ctx.N
    if beta is None:
        beta = (ZERO,) * n
    beta = tuple(Q(c) for c in beta)
    out = rep_property_check(mod, samples, seed, beta=beta)
    root = Stream(seed, f"jet/m{m}/k{k}")

    st3 = root.substream("associative")

    def chk_assoc(idx: int):
        r = st3.vec(n, 3)
        s = st3.vec(n, 3)
        w = random_jet_vector(mod, beta, st3)
        two = jet_action(mod, ("t", r), jet_action(mod, ("t", s), w))
        one = jet_action(mod, ("t", add_vec(r, s)), w)
        if two != one:
            return {"r": r, "s": s, "stepwise": jv_render(two), "joint": jv_render(one)}
        return None

    _sampled(out, SUITE, "translation-associative", samples, chk_assoc)

    st4 = root.substream("identity")

    def chk_ident(idx: int):
        w = random_jet_vector(mod, beta, st4)
        img = jet_action(mod, ("t", (0,) * n), w)
        if img != w:
            return {"input": jv_render(w), "image": jv_render(img)}
        return None

    _sampled(out, SUITE, "translation-identity", samples, chk_ident)

    st5 = root.substream("degree-derivation")

    def chk_d0(idx: int):
        u = st5.qvec(n)
        r = st5.vec(n, 3, nonzero=True)
        w = random_jet_vector(mod, beta, st5)
        udotr = sum((u[i] * r[i] for i in range(n)), ZERO)
        for kind in ("d", "t"):
            lhs = jv_sub(jet_action(mod, ("d0", u), jet_action(mod, (kind, r), w)),
                         jet_action(mod, (kind, r), jet_action(mod, ("d0", u), w)))
            rhs = jv_scale(jet_action(mod, (kind, r), w), udotr)
            if lhs != rhs:
                return {"u": [qstr(c) for c in u], "r": r, "with": kind,
                        "commutator": jv_render(lhs), "expected": jv_render(rhs)}
        return None

    _sampled(out, SUITE, "degree-derivation-brackets", samples, chk_d0)

    st6 = root.substream("reduction-matrices")

    def chk_mats(idx: int):
        x = random_reduction_element(n, st6)
        y = random_reduction_element(n, st6)
        direct = commutator(mod.matrix(x), mod.matrix(y))
        through = mod.matrix(reduction_bracket(ctx, x, y))
        if not mat_eq(direct, through):
            return {"x": _render_reduction(x), "y": _render_reduction(y),
                    "commutator": _mat_render(direct), "bracket-image": _mat_render(through)}
        return None

    _sampled(out, SUITE, "reduction-bracket-matrices", samples, chk_mats)

    kb = sp_kernel_basis(ctx, 2)
    zero = zero_matrix(mod.dim)
    bad_kernel = None
    for z in kb:
        if not mat_eq(mod.matrix(z), zero):
            bad_kernel = {"element": _render_reduction(z),
                          "matrix": _mat_render(mod.matrix(z))}
            break
    out.append(record(SUITE, "realisation-kernel-zero",
                      "fail" if bad_kernel else "pass",
                      value=None if bad_kernel else {"kernel-elements": len(kb)},
                      counterexample=bad_kernel))

    st7 = root.substream("slices")

    def chk_slice(idx: int):
        s = st7.vec(n, 3, nonzero=True)
        k0 = st7.vec(n, 2)
        for b in range(mod.dim):
            unit = tuple(ONE if i == b else ZERO for i in range(mod.dim))
            w = JetVector(beta, {k0: unit})
            img = jet_action(mod, ("t", s), w)
            if img.terms != {add_vec(k0, s): unit}:
                return {"s": s, "degree": k0, "coordinate": b, "image": jv_render(img)}
            back = jet_action(mod, ("t", neg_vec(s)), img)
            if back != w:
                return {"s": s, "degree": k0, "coordinate": b, "round-trip": jv_render(back)}
        return None

    _sampled(out, SUITE, "translation-slice-bijective", samples,
             chk_slice, extra={"slice-dim": mod.dim})
    return out


def _render_reduction(x: dict) -> dict:
    return {str(tuple(k)): qstr(c) for k, c in sorted(x.items())}


# -- the level-zero tensor module -----------------------------------------------------

class HighestWeightModule:
    """Level-zero tensor module: an sl2 highest-weight factor, a symmetric
    power of the natural symplectic module, and a free Laurent degree. The
    sl2 current generators act on the first factor and shift the degree, the
    central lines act as zero, the degree-zero derivations act by the
    (u | s+beta) eigenvalue, and the derivation lines act on the symplectic
    factor through the jet rule. Vectors are dicts (j, b, degree) -> scalar."""

    __slots__ = ("alg", "ctx", "sl2part", "sppart", "beta")

    def __init__(self, mu: int, k: int, beta=None, m: int = 1, kernel_scalar=ZERO):
        self.ctx = std_J(m)
        self.alg = SkewAlgebra(self.ctx)
        self.sl2part = Sl2Module(mu)
        self.sppart = ReductionAction(self.ctx, SymmetricPower(m, k), kernel_scalar)
        if beta is None:
            beta = (ZERO,) * self.ctx.N
        self.beta = tuple(Q(c) for c in beta)

    @property
    def mu(self) -> int:
        return self.sl2part.mu

    @property
    def slice_dim(self) -> int:
        return self.sl2part.dim * self.sppart.dim

    def basis_at(self, s) -> list[tuple]:
        s = tuple(s)
        return [(j, b, s) for j in range(self.sl2part.dim)
                for b in range(self.sppart.dim)]

    def act_symbol(self, sym: Symbol, vec: dict) -> dict:
        kind, aux, r = sym
        out: dict = {}

        def bump(key, c) -> None:
            tot = out.get(key, ZERO) + c
            if tot:
                out[key] = tot
            else:
                out.pop(key, None)

        if kind == "gx":
            mat = self.sl2part.action(aux)
            for (j, b, s), c in vec.items():
                deg = add_vec(s, r)
                for i in range(self.sl2part.dim):
                    if mat[i][j]:
                        bump((i, b, deg), mat[i][j] * c)
        elif kind in ("k0", "kb"):
            return {}
        elif kind == "du":
            for (j, b, s), c in vec.items():
                scal = s[aux] + self.beta[aux]
                if scal:
                    bump((j, b, s), scal * c)
        elif kind == "hb":
            br = self.ctx.apply(r)
            tm = self.sppart.t_matrix(r)
            n = self.ctx.N
            for (j, b, s), c in vec.items():
                deg = add_vec(s, r)
                scal = sum((br[i] * (s[i] + self.beta[i]) for i in range(n)), ZERO)
                if scal:
                    bump((j, b, deg), scal * c)
                for i in range(self.sppart.dim):
                    if tm[i][b]:
                        bump((j, i, deg), tm[i][b] * c)
        else:
            raise ValueError(f"unknown symbol kind {kind!r}")
        return out

    def act(self, x: Element, vec: dict) -> dict:
        out: dict = {}
        for sym, coeff in x.items():
            img = self.act_symbol(sym, vec)
            for key, c in img.items():
                tot = out.get(key, ZERO) + coeff * c
                if tot:
                    out[key] = tot
                else:
                    out.pop(key, None)
        return out


def build_highest_weight_module(mu: int, k: int, beta=None, m: int = 1,
                                kernel_scalar=ZERO) -> HighestWeightModule:
    return HighestWeightModule(mu, k, beta=beta, m=m, kernel_scalar=kernel_scalar)


def _hw_render(vec: dict) -> dict:
    return {str(key): qstr(c) for key, c in sorted(vec.items())}


def _hw_sub(x: dict, y: dict) -> dict:
    out = dict(x)
    for key, c in y.items():
        tot = out.get(key, ZERO) - c
        if tot:
            out[key] = tot
        else:
            out.pop(key, None)
    return out


def random_hw_vector(mod: HighestWeightModule, stream: Stream,
                     radius: int = 2, terms: int = 2) -> dict:
    out: dict = {}
    for _ in range(terms):
        key = (stream.int_in(0, mod.sl2part.dim - 1),
               stream.int_in(0, mod.sppart.dim - 1),
               stream.vec(mod.ctx.N, radius))
        tot = out.get(key, ZERO) + stream.rational(nonzero=True)
        if tot:
            out[key] = tot
        else:
            out.pop(key, None)
    return out


def full_rep_check(mod: HighestWeightModule, samples: int, seed: int,
                   radius: int = 2) -> list[dict]:
    """Generator-pair bracket relations: for sampled basis symbols x, y of the
    skew family, the commutator of their actions equals the action of their
    bracket; the central lines act as zero; the derivation lines intertwine
    the current generators with the (Br|s) coefficient."""
    alg = mod.alg
    n = mod.ctx.N
    out: list[dict] = []
    root = Stream(seed, f"highest-weight/rep/mu{mod.mu}/k{mod.sppart.space.k}")

    st1 = root.substream("pairs")

    def chk_pairs(idx: int):
        x = random_symbol(alg, st1, radius)
        y = random_symbol(alg, st1, radius)
        w = random_hw_vector(mod, st1, radius)
        lhs = _hw_sub(mod.act_symbol(x, mod.act_symbol(y, w)),
                      mod.act_symbol(y, mod.act_symbol(x, w)))
        rhs = mod.act(alg.bracket_symbols(x, y), w)
        if lhs != rhs:
            return {"x": render_symbol(alg, x), "y": render_symbol(alg, y),
                    "input": _hw_render(w), "commutator": _hw_render(lhs),
                    "bracket-action": _hw_render(rhs)}
        return None

    _sampled(out, HW_SUITE, "bracket-pairs", samples, chk_pairs)

    st2 = root.substream("central")

    def chk_central(idx: int):
        w = random_hw_vector(mod, st2, radius)
        syms = [("k0", st2.int_in(0, n - 1), (0,) * n),
                ("kb", 0, st2.vec(n, radius, nonzero=True))]
        for sym in syms:
            img = mod.act_symbol(sym, w)
            if img:
                return {"symbol": render_symbol(alg, sym), "image": _hw_render(img)}
        return None

    _sampled(out, HW_SUITE, "central-zero", samples, chk_central)

    st3 = root.substream("intertwine")

    def chk_intertwine(idx: int):
        r = st3.vec(n, radius, nonzero=True)
        s = st3.vec(n, radius)
        a = st3.int_in(0, 2)
        w = random_hw_vector(mod, st3, radius)
        hb = ("hb", 0, r)
        cur = ("gx", a, s)
        lhs = _hw_sub(mod.act_symbol(hb, mod.act_symbol(cur, w)),
                      mod.act_symbol(cur, mod.act_symbol(hb, w)))
        rhs = mod.act_symbol(("gx", a, add_vec(r, s)), w)
        rhs = {key: pairing(mod.ctx, r, s) * c for key, c in rhs.items()} \
            if pairing(mod.ctx, r, s) else {}
        if lhs != rhs:
            return {"r": r, "s": s, "generator": a, "input": _hw_render(w),
                    "commutator": _hw_render(lhs), "expected": _hw_render(rhs)}
        return None

    _sampled(out, HW_SUITE, "derivation-intertwine", samples, chk_intertwine)
    return out


def integrability_check(mod: HighestWeightModule, samples: int, seed: int,
                        radius: int = 2) -> list[dict]:
    """Nilpotent current generators: e and f at any degree kill every vector
    after mu+1 applications, and e at degree zero survives mu applications on
    the lowest basis vector."""
    out: list[dict] = []
    n = mod.ctx.N
    mu = mod.mu
    st = Stream(seed, f"highest-weight/integrable/mu{mu}/k{mod.sppart.space.k}")

    def chk_nilpotent(idx: int):
        r = st.vec(n, radius)
        w = random_hw_vector(mod, st, radius)
        for a in (0, 2):
            img = dict(w)
            for _ in range(mu + 1):
                img = mod.act_symbol(("gx", a, r), img)
            if img:
                return {"r": r, "generator": a, "input": _hw_render(w),
                        "survivor": _hw_render(img)}
        return None

    _sampled(out, HW_SUITE, "integrability", samples, chk_nilpotent,
             extra={"power": mu + 1})

    lowest = {(mu, 0, (0,) * n): ONE}
    img = dict(lowest)
    for _ in range(mu):
        img = mod.act_symbol(("gx", 0, (0,) * n), img)
    sharp = bool(img) or mu == 0
    out.append(record(HW_SUITE, "integrability-order-sharp",
                      "pass" if sharp else "fail",
                      value={"power": mu} if sharp else None,
                      counterexample=None if sharp else {"input": _hw_render(lowest)}))
    return out


def weight_dims(mod: HighestWeightModule, radius: int) -> tuple[dict, list]:
    """Tally of weight-space dimensions over the degree box, verifying along
    the way that every basis vector is a joint eigenvector of the Cartan
    current at degree zero and of each degree-zero derivation. Returns the
    (h-eigenvalue, degree) -> dimension table and any eigenvector defects."""
    n = mod.ctx.N
    zero = (0,) * n
    table: dict[tuple, int] = {}
    defects: list[dict] = []
    for s in box(n, radius):
        for key in mod.basis_at(s):
            j = key[0]
            v = {key: ONE}
            a = mod.mu - 2 * j
            hv = mod.act_symbol(("gx", 1, zero), v)
            expected = {key: Q(a)} if a else {}
            ok = hv == expected
            for i in range(n):
                if not ok:
                    break
                dv = mod.act_symbol(("du", i, zero), v)
                scal = s[i] + mod.beta[i]
                ok = dv == ({key: scal} if scal else {})
            if ok:
                table[(a, s)] = table.get((a, s), 0) + 1
            else:
                defects.append({"basis": str(key)})
    return table, defects


def weight_dim_records(mod: HighestWeightModule, radius: int) -> list[dict]:
    """Weight table versus the product rule: each (eigenvalue, degree) cell
    must have dimension (sl2 weight multiplicity) x (symplectic factor
    dimension), with no extra cells."""
    table, defects = weight_dims(mod, radius)
    n = mod.ctx.N
    degrees = box(n, radius)
    expected: dict[tuple, int] = {}
    for s in degrees:
        for a in mod.sl2part.weights:
            expected[(a, s)] = expected.get((a, s), 0) + mod.sppart.dim
    bad = None
    if defects:
        bad = {"non-eigenvectors": defects[:3]}
    elif table != expected:
        off = sorted(set(table) ^ set(expected))[:3] or \
            sorted(k for k in table if table[k] != expected[k])[:3]
        bad = {"cells": [{"weight": k[0], "degree": list(k[1]),
                          "computed": table.get(k, 0), "expected": expected.get(k, 0)}
                         for k in off]}
    out = [record(HW_SUITE, "weight-dims", "fail" if bad else "pass",
                  value=None if bad else {
                      "degrees": len(degrees),
                      "weights-per-degree": mod.sl2part.dim,
                      "cell-dim": mod.sppart.dim},
                  counterexample=bad)]
    out.extend(_reflection_records(mod, table, radius))
    return out


def _reflection_records(mod: HighestWeightModule, table: dict, radius: int) -> list[dict]:
    """Reflection symmetry of the weight table: reflecting by a real root
    (current root plus lattice degree r) sends the cell (a, s) to (-a, s - a r)
    with equal dimension, and a cell pairing positively with the root has the
    cell one root-step down present. Instances leaving the degree box are
    counted but not checked."""
    n = mod.ctx.N
    out: list[dict] = []
    shifts = [r for r in box(n, 1)]

    checked = skipped = 0
    bad = None
    for (a, s), d in sorted(table.items()):
        for r in shifts:
            for eps in (1, -1):
                target = tuple(s[i] - eps * a * r[i] for i in range(n))
                if any(abs(c) > radius for c in target):
                    skipped += 1
                    continue
                checked += 1
                if table.get((-a, target), 0) != d:
                    bad = {"weight": a, "degree": list(s), "root-degree": list(r),
                           "sign": eps, "reflected-dim": table.get((-a, target), 0),
                           "dim": d}
                    break
            if bad:
                break
        if bad:
            break
    if bad is None and checked == 0:
        out.append(record(HW_SUITE, "reflection-dims", "skip",
                          reason="no reflected weight lands in the degree box"))
    else:
        out.append(record(HW_SUITE, "reflection-dims", "fail" if bad else "pass",
                          value=None if bad else {"checked": checked, "out-of-box": skipped},
                          counterexample=bad))

    checked = skipped = 0
    bad = None
    for (a, s), d in sorted(table.items()):
        for r in shifts:
            for eps in (1, -1):
                if eps * a <= 0:
                    continue
                target = tuple(s[i] - r[i] for i in range(n))
                if any(abs(c) > radius for c in target):
                    skipped += 1
                    continue
                checked += 1
                if table.get((a - 2 * eps, target), 0) <= 0:
                    bad = {"weight": a, "degree": list(s), "root-degree": list(r),
                           "sign": eps, "missing": [a - 2 * eps, list(target)]}
                    break
            if bad:
                break
        if bad:
            break
    if bad is None and checked == 0:
        out.append(record(HW_SUITE, "reflection-step", "skip",
                          reason="no weight pairs positively with a real root in the box"))
    else:
        out.append(record(HW_SUITE, "reflection-step", "fail" if bad else "pass",
                          value=None if bad else {"checked": checked, "out-of-box": skipped},
                          counterexample=bad))
    return out


def highest_weight_suite(mu: int, k: int, beta, radius: int, samples: int,
                         seed: int, m: int = 1) -> list[dict]:
    """Level-zero tensor module suite: generator-pair brackets, central lines
    acting as zero, derivation intertwining, integrability with sharp order,
    and the weight table with its reflection symmetries."""
    mod = build_highest_weight_module(mu, k, beta=beta, m=m)
    out = full_rep_check(mod, samples, seed, radius=radius)
    out.extend(integrability_check(mod, max(1, samples // 4), seed, radius=radius))
    out.extend(weight_dim_records(mod, radius))
    return out
