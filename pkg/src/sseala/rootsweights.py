"""Extended weights, real-root reflections, and triangular gradings.

Weights carry a coefficient on the sl2 root plus coefficients on the
characters dual to the degree derivations (degree part) and to the central
generators (level part); the bilinear form restricts to the standard sl2
form and pairs the degree block against the level block. Real roots are
signed copies of the sl2 root shifted by a lattice degree; their coroots
drive reflections and the weight-table symmetry checks of the level-zero
module. The triangular classifiers grade the skew families two ways: by the
sl2 root alone, and by the sign of the last degree coordinate for the
corner-extended form, whose degree-zero derivation slice embeds into the
nondegenerate family one lattice rank down.
"""

from __future__ import annotations

import re

from .engine import Element, SkewAlgebra, Symbol, el_add, el_scale, render_element, render_symbol
from .jetmodules import HW_SUITE, HighestWeightModule, build_highest_weight_module, weight_dims
from .lattice import Vec, add_vec, box, pairing, std_J, std_J1
from .linalg import det
from .report import record
from .sampling import Stream
from .scalars import ONE, Q, ZERO, qstr

KEALA_SUITE = "keala"


# -- extended weights -----------------------------------------------------------

class ExtendedWeight:
    """Rational weight on the extended Cartan: a coefficient on the sl2 root,
    one degree coefficient per lattice direction (dual to the degree
    derivations), and one level coefficient per direction (dual to the
    central generators)."""

    __slots__ = ("root", "degree", "level")

    def __init__(self, root, degree, level=None):
        self.root = Q(root)
        self.degree = tuple(Q(c) for c in degree)
        if level is None:
            level = (ZERO,) * len(self.degree)
        self.level = tuple(Q(c) for c in level)
        if len(self.level) != len(self.degree):
            raise ValueError("degree and level parts must have equal length")

    @property
    def n(self) -> int:
        return len(self.degree)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ExtendedWeight) and self.root == other.root
                and self.degree == other.degree and self.level == other.level)

    def __hash__(self) -> int:
        return hash((self.root, self.degree, self.level))

    def __repr__(self) -> str:
        return (f"ExtendedWeight({qstr(self.root)}, "
                f"({','.join(qstr(c) for c in self.degree)}), "
                f"({','.join(qstr(c) for c in self.level)}))")


def wt_add(x: ExtendedWeight, y: ExtendedWeight) -> ExtendedWeight:
    if x.n != y.n:
        raise ValueError("weight addition needs equal lattice ranks")
    return ExtendedWeight(x.root + y.root,
                          tuple(a + b for a, b in zip(x.degree, y.degree)),
                          tuple(a + b for a, b in zip(x.level, y.level)))


def wt_scale(x: ExtendedWeight, c) -> ExtendedWeight:
    c = Q(c)
    return ExtendedWeight(c * x.root, tuple(c * a for a in x.degree),
                          tuple(c * a for a in x.level))


def wt_sub(x: ExtendedWeight, y: ExtendedWeight) -> ExtendedWeight:
    return wt_add(x, wt_scale(y, -ONE))


def gram_matrix(n: int):
    """Pairing matrix in the coordinate order (root, degree block, level
    block): the root has square length 2 and is orthogonal to the rest, the
    degree and level blocks are isotropic and pair identically."""
    size = 1 + 2 * n
    g = [[ZERO] * size for _ in range(size)]
    g[0][0] = Q(2)
    for i in range(n):
        g[1 + i][1 + n + i] = ONE
        g[1 + n + i][1 + i] = ONE
    return g


def weight_pairing(x: ExtendedWeight, y: ExtendedWeight) -> Q:
    if x.n != y.n:
        raise ValueError("weight pairing needs equal lattice ranks")
    out = 2 * x.root * y.root
    for i in range(x.n):
        out = out + x.degree[i] * y.level[i] + x.level[i] * y.degree[i]
    return out


def weight_coords(x: ExtendedWeight) -> tuple:
    """Coordinates in the order the Gram matrix uses."""
    return (x.root,) + x.degree + x.level


# -- real roots and coroots --------------------------------------------------------

class RealRoot:
    """Non-isotropic root: a signed copy of the sl2 root shifted by an
    integer lattice degree. The pure lattice directions are isotropic and
    rejected."""

    __slots__ = ("sign", "shift")

    def __init__(self, sign: int, shift):
        if sign not in (1, -1):
            raise ValueError("isotropic input: a real root needs sl2 part +1 or -1")
        self.sign = sign
        self.shift = tuple(int(c) for c in shift)

    def __eq__(self, other) -> bool:
        return (isinstance(other, RealRoot) and self.sign == other.sign
                and self.shift == other.shift)

    def __hash__(self) -> int:
        return hash((self.sign, self.shift))

    def __repr__(self) -> str:
        return f"RealRoot({self.sign}, {self.shift})"


def as_weight(gamma: RealRoot) -> ExtendedWeight:
    return ExtendedWeight(Q(gamma.sign), gamma.shift)


class Coroot:
    """Evaluation data of a coroot: a coefficient on the sl2 coroot plus one
    coefficient per central generator."""

    __slots__ = ("root", "central")

    def __init__(self, root, central):
        self.root = Q(root)
        self.central = tuple(Q(c) for c in central)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Coroot) and self.root == other.root
                and self.central == other.central)

    def __repr__(self) -> str:
        return f"Coroot({qstr(self.root)}, ({','.join(qstr(c) for c in self.central)}))"


def coroot(gamma: RealRoot) -> Coroot:
    """Signed sl2 coroot plus 2/(square length) times the lattice shift on
    the central generators."""
    g = as_weight(gamma)
    norm = weight_pairing(g, g)
    if norm == 0:
        raise ValueError("isotropic root has no coroot")
    return Coroot(Q(gamma.sign), tuple(Q(2 * c) / norm for c in gamma.shift))


def eval_coroot(lam: ExtendedWeight, cor: Coroot) -> Q:
    """The sl2 root takes value 2 on its own coroot; the level coefficients
    pair against the central ones; the degree part evaluates to zero."""
    if len(cor.central) != lam.n:
        raise ValueError("coroot evaluation needs equal lattice ranks")
    out = 2 * lam.root * cor.root
    for i in range(lam.n):
        out = out + lam.level[i] * cor.central[i]
    return out


def reflect(gamma: RealRoot, lam: ExtendedWeight) -> ExtendedWeight:
    """The weight minus its coroot value times the root."""
    return wt_sub(lam, wt_scale(as_weight(gamma), eval_coroot(lam, coroot(gamma))))


# -- reflection strings -------------------------------------------------------------

_ROOT_HEAD = re.compile(r"^([+-]?)alpha")
_DELTA_TERM = re.compile(r"^([+-])(\d*)delta\[(\d+)\]")


def parse_root(text: str, n: int) -> RealRoot:
    """Parse a real root like "alpha", "-alpha+delta[1]", or
    "alpha-2delta[2]"; lattice indices are 1-based."""
    s = text.replace(" ", "")
    head = _ROOT_HEAD.match(s)
    if not head:
        raise ValueError(f"real root must start with 'alpha' or '-alpha': {text!r}")
    sign = -1 if head.group(1) == "-" else 1
    shift = [0] * n
    rest = s[head.end():]
    while rest:
        term = _DELTA_TERM.match(rest)
        if not term:
            raise ValueError(f"cannot parse root term at {rest!r} in {text!r}")
        coeff = int(term.group(2) or "1")
        if term.group(1) == "-":
            coeff = -coeff
        idx = int(term.group(3))
        if not 1 <= idx <= n:
            raise ValueError(f"delta index {idx} outside 1..{n} in {text!r}")
        shift[idx - 1] += coeff
        rest = rest[term.end():]
    return RealRoot(sign, shift)


def parse_reflections(text: str, n: int) -> list[RealRoot]:
    return [parse_root(item, n) for item in text.split(",") if item.strip()]


def render_root(gamma: RealRoot) -> str:
    parts = ["alpha" if gamma.sign > 0 else "-alpha"]
    for i, c in enumerate(gamma.shift):
        if c == 0:
            continue
        mag = abs(c)
        parts.append(f"{'+' if c > 0 else '-'}{'' if mag == 1 else mag}delta[{i + 1}]")
    return "".join(parts)


def default_reflections(n: int) -> list[RealRoot]:
    """The bare sl2 root, its single-step positive shifts, and one negative
    copy shifted along the first direction."""
    units = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = [RealRoot(1, (0,) * n)]
    roots.extend(RealRoot(1, u) for u in units)
    roots.append(RealRoot(-1, units[0]))
    return roots


# -- sampled identity records -----------------------------------------------------

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


def _wt_render(lam: ExtendedWeight) -> dict:
    return {"root": qstr(lam.root), "degree": [qstr(c) for c in lam.degree],
            "level": [qstr(c) for c in lam.level]}


def random_weight(stream: Stream, n: int, max_num: int = 3, max_den: int = 2) -> ExtendedWeight:
    return ExtendedWeight(stream.rational(max_num, max_den),
                          stream.qvec(n, max_num, max_den),
                          stream.qvec(n, max_num, max_den))


def random_root(stream: Stream, n: int, radius: int = 2) -> RealRoot:
    return RealRoot(stream.choice((1, -1)), stream.vec(n, radius))


def reflection_records(n: int, samples: int, seed: int, radius: int = 2) -> list[dict]:
    """Module-independent form identities: the Gram matrix is symmetric and
    nondegenerate, coroot values match the form formula, and sampled
    reflections are involutive isometries fixing the orthogonal complement."""
    out: list[dict] = []
    g = gram_matrix(n)
    size = len(g)
    d = det(g)
    symmetric = all(g[i][j] == g[j][i] for i in range(size) for j in range(size))
    ok = symmetric and d != 0
    out.append(record(HW_SUITE, "gram-nondegenerate", "pass" if ok else "fail",
                      value={"size": size, "det": d} if ok else None,
                      counterexample=None if ok else {"symmetric": symmetric, "det": qstr(d)}))
    root = Stream(seed, f"highest-weight/roots/n{n}")

    st1 = root.substream("coroot")

    def chk_coroot(idx: int):
        lam = random_weight(st1, n)
        gamma = random_root(st1, n, radius)
        gw = as_weight(gamma)
        lhs = eval_coroot(lam, coroot(gamma))
        rhs = 2 * weight_pairing(lam, gw) / weight_pairing(gw, gw)
        if lhs != rhs:
            return {"root": render_root(gamma), "weight": _wt_render(lam),
                    "coroot-value": qstr(lhs), "form-value": qstr(rhs)}
        return None

    _sampled(out, HW_SUITE, "coroot-via-form", samples, chk_coroot)

    st2 = root.substream("involution")

    def chk_involution(idx: int):
        lam = random_weight(st2, n)
        gamma = random_root(st2, n, radius)
        twice = reflect(gamma, reflect(gamma, lam))
        if twice != lam:
            return {"root": render_root(gamma), "weight": _wt_render(lam),
                    "twice": _wt_render(twice)}
        return None

    _sampled(out, HW_SUITE, "reflection-involution", samples, chk_involution)

    st3 = root.substream("isometry")

    def chk_isometry(idx: int):
        lam = random_weight(st3, n)
        mu = random_weight(st3, n)
        gamma = random_root(st3, n, radius)
        before = weight_pairing(lam, mu)
        after = weight_pairing(reflect(gamma, lam), reflect(gamma, mu))
        if before != after:
            return {"root": render_root(gamma), "weight": _wt_render(lam),
                    "other": _wt_render(mu), "before": qstr(before), "after": qstr(after)}
        return None

    _sampled(out, HW_SUITE, "reflection-isometry", samples, chk_isometry)

    st4 = root.substream("fixed")

    def chk_fixed(idx: int):
        lam = random_weight(st4, n)
        gamma = random_root(st4, n, radius)
        cor = coroot(gamma)
        # project onto the coroot kernel: the root itself takes value 2
        perp = wt_sub(lam, wt_scale(as_weight(gamma), eval_coroot(lam, cor) / 2))
        if eval_coroot(perp, cor) != 0 or reflect(gamma, perp) != perp:
            return {"root": render_root(gamma), "weight": _wt_render(perp),
                    "coroot-value": qstr(eval_coroot(perp, cor))}
        return None

    _sampled(out, HW_SUITE, "reflection-fixed-points", samples, chk_fixed)
    return out


# -- weight-table symmetry ----------------------------------------------------------

def level_zero_weight(a: int, s, beta) -> ExtendedWeight:
    """Weight of a level-zero basis vector: sl2 eigenvalue a and degree
    eigenvalues s + beta."""
    return ExtendedWeight(Q(a, 2), tuple(s[i] + beta[i] for i in range(len(s))))


def _table_key(lam: ExtendedWeight, beta) -> tuple | None:
    """Recover the (sl2 eigenvalue, lattice degree) cell of a level-zero
    weight; None when the weight leaves the level-zero integral grid."""
    if any(c != 0 for c in lam.level):
        return None
    a2 = 2 * lam.root
    if a2.denominator != 1:
        return None
    s = []
    for i in range(lam.n):
        c = lam.degree[i] - beta[i]
        if c.denominator != 1:
            return None
        s.append(int(c))
    return (int(a2), tuple(s))


def weyl_symmetry_records(mod: HighestWeightModule, reflections: list[RealRoot],
                          radius: int) -> list[dict]:
    """Weight-table symmetry driven by coroots: each listed real root must
    map tabulated weights to tabulated weights of equal dimension, and every
    weight with positive coroot value must admit the one-root step down.
    Images leaving the degree box are counted, not checked."""
    table, defects = weight_dims(mod, radius)
    out: list[dict] = []
    if defects:
        out.append(record(HW_SUITE, "weyl-weight-table", "fail",
                          counterexample={"non-eigenvectors": defects[:3]}))
        return out
    beta = mod.beta
    items = sorted(table.items())
    for gamma in reflections:
        cor = coroot(gamma)
        gw = as_weight(gamma)
        name = render_root(gamma)

        checked = skipped = 0
        bad_member = bad_dim = None
        for (a, s), dim in items:
            lam = level_zero_weight(a, s, beta)
            image = wt_sub(lam, wt_scale(gw, eval_coroot(lam, cor)))
            key = _table_key(image, beta)
            if key is None or any(abs(c) > radius for c in key[1]):
                skipped += 1
                continue
            checked += 1
            got = table.get(key, 0)
            if got == 0 and bad_member is None:
                bad_member = {"weight": a, "degree": list(s), "root": name}
            if got != dim and bad_dim is None:
                bad_dim = {"weight": a, "degree": list(s), "root": name,
                           "dim": dim, "reflected-dim": got}
        if checked == 0:
            reason = "every reflected weight leaves the degree box"
            out.append(record(HW_SUITE, f"weyl-invariance[{name}]", "skip", reason=reason))
            out.append(record(HW_SUITE, f"weyl-dim-match[{name}]", "skip", reason=reason))
        else:
            value = {"checked": checked, "out-of-box": skipped}
            out.append(record(HW_SUITE, f"weyl-invariance[{name}]",
                              "fail" if bad_member else "pass",
                              value=None if bad_member else value,
                              counterexample=bad_member))
            out.append(record(HW_SUITE, f"weyl-dim-match[{name}]",
                              "fail" if bad_dim else "pass",
                              value=None if bad_dim else value,
                              counterexample=bad_dim))

        checked = skipped = positive = 0
        bad = None
        for (a, s), dim in items:
            lam = level_zero_weight(a, s, beta)
            if eval_coroot(lam, cor) <= 0:
                continue
            positive += 1
            key = _table_key(wt_sub(lam, gw), beta)
            if key is None or any(abs(c) > radius for c in key[1]):
                skipped += 1
                continue
            checked += 1
            if table.get(key, 0) <= 0 and bad is None:
                bad = {"weight": a, "degree": list(s), "root": name,
                       "missing": [key[0], list(key[1])]}
        if checked == 0:
            reason = ("no tabulated weight pairs positively with the root"
                      if positive == 0 else "every root-step lands outside the degree box")
            out.append(record(HW_SUITE, f"root-lowering[{name}]", "skip", reason=reason))
        else:
            out.append(record(HW_SUITE, f"root-lowering[{name}]",
                              "fail" if bad else "pass",
                              value=None if bad else {"checked": checked, "out-of-box": skipped},
                              counterexample=bad))
    return out


def symmetry_suite(mu: int, k: int, beta, radius: int, samples: int, seed: int,
                   reflections: list[RealRoot] | None = None, m: int = 1) -> list[dict]:
    """Root-system records for the level-zero module: the form identities
    plus weight-table symmetry under the given reflections."""
    mod = build_highest_weight_module(mu, k, beta=beta, m=m)
    if reflections is None:
        reflections = default_reflections(mod.ctx.N)
    out = reflection_records(mod.ctx.N, samples, seed, radius=radius)
    out.extend(weyl_symmetry_records(mod, reflections, radius))
    return out


# -- triangular gradings ----------------------------------------------------------

def triangular_classify(algebra: str, sym: Symbol) -> str:
    """Grade a canonical symbol into plus/zero/minus. The nondegenerate
    families split by the sl2 root alone (raising current up, lowering
    current down, everything else central); the corner-extended family
    splits by the sign of the last degree coordinate, falling back to the
    sl2 root on the zero slice."""
    kind, aux, r = sym
    if algebra == "keala":
        last = r[-1]
        if last > 0:
            return "plus"
        if last < 0:
            return "minus"
    elif algebra != "tauB":
        raise ValueError(f"unknown decomposition {algebra!r}; choose 'tauB' or 'keala'")
    if kind == "gx":
        return "plus" if aux == 0 else "minus" if aux == 2 else "zero"
    return "zero"


_CLOSURE_LAWS = (("plus", "plus", "plus"),
                 ("zero", "plus", "plus"),
                 ("zero", "minus", "minus"),
                 ("zero", "zero", "zero"),
                 ("minus", "minus", "minus"))


def _symbol_in_part(alg: SkewAlgebra, algebra: str, stream: Stream,
                    radius: int, wanted: str) -> Symbol:
    while True:
        r = stream.vec(alg.N, radius)
        pool = [s for s in alg.symbols_at(r) if triangular_classify(algebra, s) == wanted]
        if pool:
            return stream.choice(pool)


def triangular_closure_records(alg: SkewAlgebra, algebra: str, samples: int,
                               seed: int, radius: int = 2) -> list[dict]:
    """Sampled grading laws: plus brackets into plus, the zero part preserves
    every part, minus mirrors plus."""
    out: list[dict] = []
    root = Stream(seed, f"keala/closure/{algebra}/n{alg.N}")
    for part_a, part_b, target in _CLOSURE_LAWS:
        st = root.substream(f"{part_a}-{part_b}")

        def chk(idx: int, part_a=part_a, part_b=part_b, target=target, st=st):
            x = _symbol_in_part(alg, algebra, st, radius, part_a)
            y = _symbol_in_part(alg, algebra, st, radius, part_b)
            for sym in alg.bracket_symbols(x, y):
                got = triangular_classify(algebra, sym)
                if got != target:
                    return {"x": render_symbol(alg, x), "y": render_symbol(alg, y),
                            "offender": render_symbol(alg, sym), "part": got,
                            "expected": target}
            return None

        _sampled(out, KEALA_SUITE, f"{algebra}-closure[{part_a},{part_b}]", samples, chk)
    return out


# -- the corner slice embedding ------------------------------------------------------

def _corner_display(m: int, r) -> tuple:
    """Componentwise form of the corner lattice image: the first two blocks
    swap with a sign and shift by the last coordinate, which maps to minus
    the sum of the rest."""
    last = r[2 * m]
    head = tuple(r[m + i] + last for i in range(m))
    mid = tuple(-r[i] + last for i in range(m))
    return head + mid + (-sum(r[i] for i in range(2 * m)),)


def _slice_vec(stream: Stream, n: int, radius: int) -> Vec:
    """Nonzero lattice vector confined to the zero slice of the last
    coordinate."""
    while True:
        v = stream.vec(n - 1, radius) + (0,)
        if any(v):
            return v


def _project_slice(el: Element) -> Element:
    """Drop the last (zero) degree coordinate of a slice derivation element."""
    out: Element = {}
    for (kind, aux, u), c in el.items():
        assert kind == "hb" and u[-1] == 0, "projection needs the derivation slice"
        out[("hb", aux, u[:-1])] = c
    return out


def slice_homomorphism_records(m: int, samples: int, seed: int,
                               radius: int = 2) -> list[dict]:
    """The degree-zero slice of the corner-extended family embeds in the
    nondegenerate family one lattice rank down: the lattice image matches its
    componentwise display, pairings restrict, the derivation-line map
    intertwines brackets, and the bracket against the corner central
    direction expands as pairing times corner plus corner-value times line."""
    corner = std_J1(m)
    flat = std_J(m)
    kalg = SkewAlgebra(corner)
    halg = SkewAlgebra(flat)
    n = corner.N
    out: list[dict] = []
    root = Stream(seed, f"keala/slice/m{m}")

    bad = None
    grid = box(n, radius)
    for r in grid:
        image = corner.apply(r)
        display = _corner_display(m, r)
        mism = [i for i in range(n) if image[i] != display[i]]
        if mism:
            bad = {"vector": list(r), "mismatch-locations": mism,
                   "image": [qstr(c) for c in image],
                   "display": [qstr(Q(c)) for c in display]}
            break
    out.append(record(KEALA_SUITE, "corner-image-display", "fail" if bad else "pass",
                      value=None if bad else {"vectors": len(grid)},
                      counterexample=bad))

    st1 = root.substream("pairing")

    def chk_pairing(idx: int):
        r = _slice_vec(st1, n, radius)
        s = _slice_vec(st1, n, radius)
        lhs = pairing(corner, r, s)
        rhs = pairing(flat, r[:-1], s[:-1])
        if lhs != rhs:
            return {"r": list(r), "s": list(s),
                    "corner": qstr(lhs), "flat": qstr(rhs)}
        return None

    _sampled(out, KEALA_SUITE, "slice-pairing", samples, chk_pairing)

    st2 = root.substream("homomorphism")

    def chk_hom(idx: int):
        r = _slice_vec(st2, n, radius)
        s = _slice_vec(st2, n, radius)
        image = _project_slice(kalg.bracket(kalg.h(r), kalg.h(s)))
        target = halg.bracket(halg.h(r[:-1]), halg.h(s[:-1]))
        if image != target:
            return {"r": list(r), "s": list(s),
                    "image": render_element(halg, image),
                    "target": render_element(halg, target)}
        return None

    _sampled(out, KEALA_SUITE, "slice-homomorphism", samples, chk_hom)

    st3 = root.substream("central")
    e_last = (0,) * (n - 1) + (1,)

    def chk_central(idx: int):
        r = _slice_vec(st3, n, radius)
        s = _slice_vec(st3, n, radius)
        lhs = kalg.bracket(kalg.h(r), kalg.K(e_last, s))
        image = corner.apply(r)
        rs = add_vec(r, s)
        rhs = el_add(el_scale(kalg.K(e_last, rs), pairing(corner, r, s)),
                     el_scale(kalg.K(r, rs), image[n - 1]))
        if lhs != rhs:
            return {"r": list(r), "s": list(s),
                    "bracket": render_element(kalg, lhs),
                    "expansion": render_element(kalg, rhs)}
        return None

    _sampled(out, KEALA_SUITE, "slice-central-bracket", samples, chk_central)
    return out


def radical_records(m: int) -> list[dict]:
    """Radical of the corner-extended form: rank one, spanned by the vector
    with 1 on the first block, -1 on the second, and 1 at the corner."""
    ctx = std_J1(m)
    basis = ctx.radical_basis
    expected = tuple([1] * m + [-1] * m + [1])
    ok = len(basis) == 1 and (basis[0] == expected
                              or tuple(-c for c in basis[0]) == expected)
    bad = None if ok else {"rank": len(basis), "basis": [list(v) for v in basis],
                           "expected": list(expected)}
    return [record(KEALA_SUITE, "corner-radical-line", "pass" if ok else "fail",
                   value=None if bad else {"rank": 1, "generator": list(basis[0])},
                   counterexample=bad)]


def keala_suite(m: int, samples: int, seed: int, radius: int = 2) -> list[dict]:
    """Corner-extended family suite: triangular closure for both gradings,
    the degree-zero slice embedding, and the radical line."""
    out = triangular_closure_records(SkewAlgebra(std_J(m)), "tauB", samples, seed,
                                     radius=radius)
    out.extend(triangular_closure_records(SkewAlgebra(std_J1(m)), "keala", samples,
                                          seed, radius=radius))
    out.extend(slice_homomorphism_records(m, samples, seed, radius=radius))
    out.extend(radical_records(m))
    return out
