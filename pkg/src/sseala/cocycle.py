"""Exact solver for the degree-pair scalar constraint system.

A nondegenerate skew form B attaches one unknown scalar lambda[r, s] to
each ordered pair of nonzero lattice degrees, and one linear constraint
to each triple (l, r, s) of nonzero degrees:

    (Bl|s) lambda[r, s+l] + (Bl|r) lambda[s, r+l] - (Bl|r+s) lambda[r, s] = 0.

build_system truncates the unknowns to the pairs inside a degree box and
keeps exactly the rows all of whose referenced pairs stay inside; shifts
l range over the doubled box, the largest range that can produce such
rows.  A pair with a zero index never enters a row because its
coefficient vanishes identically, so the zero-index scalar participates
only through check_family.  solve computes the exact rational nullspace
of the truncation, and identity_records asserts the equal-value
consequences of the constraint on every computed solution.  The
quadratic relation generic^2 = opposite * zero_index is never part of
the linear system and is checked on its own.
"""

from __future__ import annotations

from .lattice import SkewForm, add_vec, box, pairing
from .report import record
from .scalars import ONE, Q, ZERO, qstr

COCYCLE_SUITE = "cocycle"

Vec = tuple[int, ...]
Pair = tuple[Vec, Vec]


class ScalarFamily:
    """Three nonzero scalars: a generic pair value, an opposite-pair
    value, and a zero-index value."""

    __slots__ = ("generic", "opposite", "zero_index")

    def __init__(self, generic, opposite, zero_index):
        vals = (Q(generic), Q(opposite), Q(zero_index))
        if any(v == 0 for v in vals):
            raise ValueError("family scalars must all be nonzero")
        self.generic, self.opposite, self.zero_index = vals

    def __repr__(self) -> str:
        return (f"ScalarFamily({qstr(self.generic)}, {qstr(self.opposite)}, "
                f"{qstr(self.zero_index)})")

    def as_dict(self) -> dict:
        return {"generic": qstr(self.generic), "opposite": qstr(self.opposite),
                "zero_index": qstr(self.zero_index)}

    def value(self, r: Vec, s: Vec) -> Q:
        """Scalar attached to the index pair (r, s)."""
        if not any(r) or not any(s):
            return self.zero_index
        if not any(add_vec(r, s)):
            return self.opposite
        return self.generic

    def product_defect(self) -> Q:
        """generic^2 - opposite * zero_index; zero for consistent families."""
        return self.generic * self.generic - self.opposite * self.zero_index


DEFAULT_FAMILY = ScalarFamily(Q(2, 3), Q(4, 3), Q(1, 3))


class CocycleSystem:
    """Box truncation of the constraint system for one skew form."""

    __slots__ = ("ctx", "radius", "support", "pairs", "index", "rows")

    def __init__(self, ctx: SkewForm, radius: int, support: tuple[Vec, ...],
                 pairs: tuple[Pair, ...], index: dict[Pair, int],
                 rows: list) -> None:
        self.ctx = ctx
        self.radius = radius
        self.support = support
        self.pairs = pairs
        self.index = index
        self.rows = rows


def build_system(ctx: SkewForm, radius: int) -> CocycleSystem:
    """Truncate the constraint system to pairs of nonzero in-box degrees."""
    if ctx.is_degenerate():
        raise ValueError("the scalar constraint system needs a nondegenerate form")
    if radius < 0:
        raise ValueError("box radius must be nonnegative")
    n = ctx.N
    support = tuple(v for v in box(n, radius) if any(v))
    pairs = tuple((r, s) for r in support for s in support)
    index = {p: i for i, p in enumerate(pairs)}
    rows = []
    for shift in box(n, 2 * radius):
        if not any(shift):
            continue
        image = ctx.apply(shift)
        dot = {v: sum((image[i] * v[i] for i in range(n)), ZERO) for v in support}
        for r in support:
            c2 = dot[r]
            for s in support:
                c1 = dot[s]
                c3 = -(c1 + c2)
                entries: dict[int, Q] = {}
                ok = True
                # a vanishing shifted index forces a vanishing coefficient,
                # so only in-box nonzero pairs are ever looked up
                if c1:
                    col = index.get((r, add_vec(s, shift)))
                    if col is None:
                        ok = False
                    else:
                        entries[col] = entries.get(col, ZERO) + c1
                if ok and c2:
                    col = index.get((s, add_vec(r, shift)))
                    if col is None:
                        ok = False
                    else:
                        entries[col] = entries.get(col, ZERO) + c2
                if ok and c3:
                    col = index[(r, s)]
                    entries[col] = entries.get(col, ZERO) + c3
                if ok:
                    entries = {k: v for k, v in entries.items() if v}
                    if entries:
                        rows.append(((shift, r, s), entries))
    return CocycleSystem(ctx, radius, support, pairs, index, rows)


def _triple_json(triple) -> dict:
    shift, r, s = triple
    return {"shift": list(shift), "left": list(r), "right": list(s)}


def check_family(system: CocycleSystem, fam: ScalarFamily) -> list[dict]:
    """Substitute the family into every row; check the product relation."""
    bad = None
    for triple, entries in system.rows:
        total = sum((c * fam.value(*system.pairs[col])
                     for col, c in entries.items()), ZERO)
        if total != 0:
            bad = dict(_triple_json(triple), value=total)
            break
    recs = [record(COCYCLE_SUITE, "family-rows",
                   "pass" if bad is None else "fail",
                   value={"rows": len(system.rows), "family": fam.as_dict()},
                   counterexample=bad)]
    defect = fam.product_defect()
    recs.append(record(COCYCLE_SUITE, "family-product-relation",
                       "pass" if defect == 0 else "fail",
                       value={"family": fam.as_dict()},
                       counterexample=None if defect == 0 else {"defect": defect}))
    return recs


class Nullspace:
    """Exact solution space of a truncated system.

    Each basis vector carries value one at its own free column and zero
    at every other free column, so the coordinates of any span member
    are its values at the free columns.
    """

    __slots__ = ("pairs", "free", "basis")

    def __init__(self, pairs: tuple[Pair, ...], free: tuple[int, ...],
                 basis: tuple[tuple[Q, ...], ...]) -> None:
        self.pairs = pairs
        self.free = free
        self.basis = basis

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def coordinates(self, vec) -> tuple[Q, ...] | None:
        """Coordinates of vec in the basis, or None when outside the span."""
        if len(vec) != len(self.pairs):
            raise ValueError("vector length does not match the unknown count")
        coords = tuple(vec[c] for c in self.free)
        rebuilt = [ZERO] * len(self.pairs)
        for a, b in zip(coords, self.basis):
            if a != 0:
                for i, x in enumerate(b):
                    if x != 0:
                        rebuilt[i] += a * x
        return coords if all(p == q for p, q in zip(rebuilt, vec)) else None


def _echelon(rows) -> dict[int, dict[int, Q]]:
    # pivot rows are scaled to a unit leading entry and hold no column
    # below their pivot, so descending back-substitution is exact
    pivots: dict[int, dict[int, Q]] = {}
    for _, entries in rows:
        row = dict(entries)
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                inv = ONE / row[c]
                pivots[c] = {k: v * inv for k, v in row.items()}
                break
            f = row.pop(c)
            for k, v in piv.items():
                if k == c:
                    continue
                nv = row.get(k, ZERO) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return pivots


def solve(system: CocycleSystem) -> Nullspace:
    """Exact nullspace of the truncated system, one vector per free column."""
    pivots = _echelon(system.rows)
    ncols = len(system.pairs)
    order = sorted(pivots, reverse=True)
    free = tuple(c for c in range(ncols) if c not in pivots)
    basis = []
    for fc in free:
        x = [ZERO] * ncols
        x[fc] = ONE
        for p in order:
            x[p] = -sum((v * x[k] for k, v in pivots[p].items() if k != p), ZERO)
        basis.append(tuple(x))
    return Nullspace(system.pairs, free, tuple(basis))


def family_vector(system: CocycleSystem, fam: ScalarFamily) -> tuple[Q, ...]:
    """The family's values on the unknown pairs, in column order."""
    return tuple(fam.value(r, s) for r, s in system.pairs)


def equal_value_instances(system: CocycleSystem) -> list[tuple[str, list]]:
    """Equal-value consequences of the constraint, grouped by hypothesis.

    For nonzero in-box degrees, with every referenced pair kept inside
    the box and zero-sum pairs excluded (the equal-value claims concern
    pairs with nonzero sum; zero-sum pairs carry their own value):

    nonorthogonal-shift, for shifts l with (Bl|s) != 0:
        lambda[s, s+l], lambda[s+l, s], lambda[s, l], lambda[l, l],
        lambda[s+l, s+l], lambda[s+l, j*l] (j != 0) and
        lambda[s, j*s+l] all equal lambda[s, s].

    orthogonal-pair, for (Br|s) == 0 with r, s, r+s nonzero:
        lambda[r, r], lambda[r+s, r+s], lambda[r+s, s], lambda[r, s]
        and lambda[s, j*s+r] equal lambda[s, s]; lambda[r, r+s] equals
        lambda[r, r]; lambda[r+s, j*r] (j != 0) equals lambda[s, s].

    opposite-pair, unconditionally:
        lambda[r, -r] equals lambda[s, -s].

    The doubled shift range of build_system makes every listed instance
    a consequence of the truncated rows, so identity_records asserts
    all of them on the whole computed nullspace.
    """
    support = system.support
    in_box = set(support)
    n = system.ctx.N
    radius = system.radius

    def generic(p: Pair) -> bool:
        return any(add_vec(p[0], p[1]))

    nonorth: set[tuple[Pair, Pair]] = set()
    orth: set[tuple[Pair, Pair]] = set()

    def put(dest, p: Pair, q: Pair) -> None:
        if p != q and generic(p) and generic(q):
            dest.add((p, q))

    for s in support:
        base = (s, s)
        for shift in box(n, 2 * radius):
            if not any(shift) or pairing(system.ctx, shift, s) == 0:
                continue
            if shift in in_box:
                put(nonorth, (s, shift), base)
                put(nonorth, (shift, shift), base)
            t = add_vec(s, shift)
            if t in in_box:
                put(nonorth, (s, t), base)
                put(nonorth, (t, s), base)
                put(nonorth, (t, t), base)
                for j in range(-radius, radius + 1):
                    if j == 0:
                        continue
                    u = tuple(j * x for x in shift)
                    if u in in_box:
                        put(nonorth, (t, u), base)
            for j in range(-2 * radius, 2 * radius + 1):
                u = add_vec(tuple(j * x for x in s), shift)
                if any(u) and u in in_box:
                    put(nonorth, (s, u), base)

    for r in support:
        for s in support:
            if pairing(system.ctx, r, s) != 0:
                continue
            t = add_vec(r, s)
            if not any(t):
                continue
            base = (s, s)
            put(orth, (r, r), base)
            put(orth, (r, s), base)
            if t in in_box:
                put(orth, (t, t), base)
                put(orth, (t, s), base)
                put(orth, (r, t), (r, r))
                for j in range(-radius, radius + 1):
                    if j == 0:
                        continue
                    u = tuple(j * x for x in r)
                    if u in in_box:
                        put(orth, (t, u), base)
            for j in range(-2 * radius, 2 * radius + 1):
                u = add_vec(tuple(j * x for x in s), r)
                if any(u) and u in in_box:
                    put(orth, (s, u), base)

    opposite: set[tuple[Pair, Pair]] = set()
    flips = [(r, tuple(-x for x in r)) for r in support]
    for p in flips[1:]:
        opposite.add((p, flips[0]))

    return [("nonorthogonal-shift", sorted(nonorth)),
            ("orthogonal-pair", sorted(orth)),
            ("opposite-pair", sorted(opposite))]


def identity_records(system: CocycleSystem, ns: Nullspace) -> list[dict]:
    """Assert the grouped equal-value instances on every nullspace vector."""
    recs = []
    for name, instances in equal_value_instances(system):
        if not instances:
            recs.append(record(COCYCLE_SUITE, f"equal-{name}", "skip",
                               reason="no in-box instances"))
            continue
        bad = None
        for p, q in instances:
            i, j = system.index[p], system.index[q]
            for b, vec in enumerate(ns.basis):
                if vec[i] != vec[j]:
                    bad = {"left": [list(p[0]), list(p[1])],
                           "right": [list(q[0]), list(q[1])],
                           "basis_vector": b}
                    break
            if bad is not None:
                break
        recs.append(record(COCYCLE_SUITE, f"equal-{name}",
                           "pass" if bad is None else "fail",
                           value={"instances": len(instances),
                                  "dimension": ns.dimension},
                           counterexample=bad))
    return recs


def cocycle_suite(ctx: SkewForm, radius: int,
                  fam: ScalarFamily | None = None) -> list[dict]:
    """Build, substitute, solve, and check one truncated system."""
    if fam is None:
        fam = DEFAULT_FAMILY
    system = build_system(ctx, radius)
    recs = [record(COCYCLE_SUITE, "system-size", "pass",
                   value={"pairs": len(system.pairs),
                          "rows": len(system.rows), "box": radius},
                   annotation="one row per degree triple whose referenced "
                              "pairs stay in the box; shifts range over "
                              "the doubled box")]
    recs += check_family(system, fam)
    ns = solve(system)
    bad = None
    for triple, entries in system.rows:
        for b, vec in enumerate(ns.basis):
            total = sum((c * vec[col] for col, c in entries.items()), ZERO)
            if total != 0:
                bad = dict(_triple_json(triple), basis_vector=b, value=total)
                break
        if bad is not None:
            break
    recs.append(record(COCYCLE_SUITE, "nullspace-resubstitution",
                       "pass" if bad is None else "fail",
                       value={"dimension": ns.dimension,
                              "rows": len(system.rows)},
                       counterexample=bad))
    coords = ns.coordinates(family_vector(system, fam))
    recs.append(record(COCYCLE_SUITE, "nullspace-family",
                       "pass" if coords is not None else "fail",
                       value={"dimension": ns.dimension,
                              "coordinates": None if coords is None
                              else [qstr(c) for c in coords]},
                       annotation="solutions of the linear rows alone; "
                                  "which of them arise from a module "
                                  "action is not decided here",
                       counterexample=None if coords is not None
                       else {"family": fam.as_dict()}))
    recs += identity_records(system, ns)
    return recs
