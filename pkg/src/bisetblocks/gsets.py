"""Finite group actions, bisets, and their tensor calculus.

A GAction stores, for every group element, the full permutation it
induces on 0..size-1.  A biset for (G, H) is an action of the direct
product G x H, with (g,h) acting as u |-> g.u.h^-1.  Isomorphism of
actions is decided by comparing transitive decompositions: the multiset
of point-stabilizer conjugacy classes, each keyed by its smallest
conjugate element tuple.

The tensor product over the middle group is computed two ways: directly
on orbits of pairs, and by the double-coset decomposition for transitive
bisets.  The extended tensor product over a subgroup X * Y of a product,
its description as deflation-restriction along the pullback map, and the
double-coset formula for tensoring induced actions are all provided.
"""

from __future__ import annotations

from collections import Counter

from .groups import (FiniteGroup, GroupHom, ProductGroup, Subgroup,
                     double_cosets, product_group, quotient)
from .namedgroups import trivial_group
from .subdirect import (ProductSubgroup, PullbackData, middle_kernel,
                        middle_witnesses, pullback, star)

TENSOR_POINT_CAP = 10 ** 6


class GAction:
    """A left action of a finite group on points 0..size-1."""

    def __init__(self, group: FiniteGroup, rows, check: bool = True) -> None:
        self.group = group
        self.rows = tuple(tuple(r) for r in rows)
        if len(self.rows) != group.order:
            raise ValueError("need one permutation per group element")
        self.size = len(self.rows[0]) if self.rows else 0
        self._decomposition = None
        if check:
            self._check()

    def _check(self) -> None:
        n = self.group.order
        ident = self.rows[self.group.identity]
        if ident != tuple(range(self.size)):
            raise ValueError("identity must act trivially")
        for row in self.rows:
            if len(row) != self.size or sorted(row) != list(range(self.size)):
                raise ValueError("each element must act by a permutation")
        # Compatibility with multiplication, exhaustively while affordable.
        if n * n * max(self.size, 1) <= 2_000_000:
            gens = range(n)
        else:
            gens = getattr(self.group, "generator_ids", None) or range(
                min(n, 8))
        t = self.group.table
        for a in gens:
            ra = self.rows[a]
            for b in range(n):
                rab = self.rows[t[a][b]]
                rb = self.rows[b]
                if any(ra[rb[x]] != rab[x] for x in range(self.size)):
                    raise ValueError("action is not compatible with products")

    def apply(self, g: int, x: int) -> int:
        return self.rows[g][x]

    def orbits(self) -> list[list[int]]:
        """Orbits as sorted lists, ordered by smallest point."""
        seen = [False] * self.size
        out = []
        for x in range(self.size):
            if seen[x]:
                continue
            orb = [x]
            seen[x] = True
            i = 0
            while i < len(orb):
                y = orb[i]
                for row in self.rows:
                    z = row[y]
                    if not seen[z]:
                        seen[z] = True
                        orb.append(z)
                i += 1
            out.append(sorted(orb))
        return out

    def stabilizer(self, x: int) -> Subgroup:
        return Subgroup(self.group,
                        [g for g in range(self.group.order)
                         if self.rows[g][x] == x], check=False)

    def fixed_points(self, elements) -> list[int]:
        """Points fixed by every listed group element."""
        out = []
        for x in range(self.size):
            if all(self.rows[g][x] == x for g in elements):
                out.append(x)
        return out

    def restrict_to_subgroup(self, S: Subgroup) -> "GAction":
        """The same points acted on by S.as_group()."""
        Sg = S.as_group()
        return GAction(Sg, [self.rows[p] for p in Sg.local_to_parent],
                       check=False)

    def decompose(self) -> "TransitiveDecomposition":
        if self._decomposition is None:
            items: Counter = Counter()
            total = 0
            for orb in self.orbits():
                stab = self.stabilizer(orb[0]).canonical_conjugate()
                items[stab.elements] += 1
                total += self.group.order // stab.order
            if total != self.size:
                raise AssertionError("orbit sizes fail the counting identity")
            self._decomposition = TransitiveDecomposition(
                self.group, tuple(sorted(items.items())))
        return self._decomposition


class TransitiveDecomposition:
    """Multiset of canonical stabilizer classes of a G-set."""

    def __init__(self, group: FiniteGroup, items) -> None:
        self.group = group
        self.items = tuple(items)

    def __eq__(self, other):
        return (isinstance(other, TransitiveDecomposition)
                and self.group.uid == other.group.uid
                and self.items == other.items)

    def __hash__(self):
        return hash((self.group.uid, self.items))

    def total_size(self) -> int:
        return sum(m * (self.group.order // len(el))
                   for el, m in self.items)

    def summands(self) -> list[tuple[Subgroup, int]]:
        return [(Subgroup(self.group, el, check=False), m)
                for el, m in self.items]

    def __repr__(self):
        parts = ", ".join(f"{len(el)}^{m}" for el, m in self.items)
        return f"TransitiveDecomposition[{parts}]"


def iso_check(A: GAction, B: GAction) -> bool:
    """Decide isomorphism of two actions of the same group object."""
    if A.group.uid != B.group.uid:
        raise ValueError("actions live over different group objects")
    return A.decompose() == B.decompose()


# -- basic constructors ----------------------------------------------

def trivial_action(G: FiniteGroup, size: int = 1) -> GAction:
    return GAction(G, [tuple(range(size))] * G.order, check=False)


def regular_action(G: FiniteGroup) -> GAction:
    return GAction(G, G.table, check=False)


def coset_action(G: FiniteGroup, S: Subgroup) -> GAction:
    """Left translation on the cosets gS; point order is by minimal member."""
    reps, idx = S.coset_index_map()
    rows = [tuple(idx[G.table[g][r]] for r in reps) for g in range(G.order)]
    act = GAction(G, rows, check=False)
    act.coset_reps = tuple(reps)
    act.coset_subgroup = S
    return act


def action_from_function(G: FiniteGroup, size: int, fn, check: bool = True
                         ) -> GAction:
    return GAction(G, [tuple(fn(g, x) for x in range(size))
                       for g in range(G.order)], check=check)


def disjoint_union(*actions: GAction) -> GAction:
    if not actions:
        raise ValueError("need at least one action")
    G = actions[0].group
    if any(a.group.uid != G.uid for a in actions):
        raise ValueError("all summands must share the acting group")
    rows = []
    for g in range(G.order):
        row: list[int] = []
        offset = 0
        for a in actions:
            row.extend(offset + v for v in a.rows[g])
            offset += a.size
        rows.append(tuple(row))
    return GAction(G, rows, check=False)


def external_product(A: GAction, B: GAction) -> GAction:
    """The product action of G1 x G2 on pairs of points."""
    amb = product_group(A.group, B.group)
    nb = B.size
    rows = []
    for x in range(amb.group.order):
        a, b = amb.decode(x)
        ra, rb = A.rows[a], B.rows[b]
        rows.append(tuple(ra[u] * nb + rb[v]
                          for u in range(A.size) for v in range(nb)))
    return GAction(amb.group, rows, check=False)


def transport_action(A: GAction, iso: GroupHom) -> GAction:
    """Rewrite an action of iso's target as an action of its source."""
    if iso.target is not A.group:
        raise ValueError("iso must land in the acting group")
    return GAction(iso.source,
                   [A.rows[iso(g)] for g in range(iso.source.order)],
                   check=False)


def rebase_action(A: GAction, group: FiniteGroup) -> GAction:
    """Move an action to an equal-table copy of its group.

    Used when the same abstract subgroup arises from two parents; the
    element orderings agree, so the row data carries over verbatim.
    """
    if group is A.group:
        return A
    if group.order != A.group.order or group.table != A.group.table:
        raise ValueError("groups are not element-wise identical")
    return GAction(group, A.rows, check=False)


# -- bisets ----------------------------------------------------------

class BisetView:
    """An action of a product group G x H, read as a (G, H)-biset."""

    def __init__(self, ambient: ProductGroup, action: GAction) -> None:
        if action.group.uid != ambient.group.uid:
            raise ValueError("action must be over the ambient product group")
        self.ambient = ambient
        self.action = action

    @property
    def left(self) -> FiniteGroup:
        return self.ambient.left

    @property
    def right(self) -> FiniteGroup:
        return self.ambient.right

    @property
    def size(self) -> int:
        return self.action.size

    def left_row(self, g: int):
        return self.action.rows[self.ambient.encode(g, self.right.identity)]

    def right_row(self, h: int):
        """The permutation u |-> u.h, i.e. the action of (1, h^-1)."""
        return self.action.rows[self.ambient.encode(
            self.left.identity, self.right.inv(h))]

    def decompose(self) -> TransitiveDecomposition:
        return self.action.decompose()

    def opposite(self) -> "BisetView":
        """The same points as an (H, G)-biset.

        The left H-action is the old right division u.h^-1 and the right
        G-action the old left division; on pairs this is just the swap
        (h,g) |-> (g,h), which is already a homomorphism.
        """
        amb = product_group(self.right, self.left)
        rows = []
        for x in range(amb.group.order):
            h, g = amb.decode(x)
            rows.append(self.action.rows[self.ambient.encode(g, h)])
        return BisetView(amb, GAction(amb.group, rows, check=False))


def biset_coset(X: ProductSubgroup) -> BisetView:
    """The transitive biset of cosets of X inside its ambient product."""
    return BisetView(X.ambient, coset_action(X.ambient.group, X))


def biset_from_left_action(A: GAction) -> BisetView:
    """View a plain G-set as a (G, 1)-biset over the shared trivial group."""
    one = trivial_group()
    amb = product_group(A.group, one)
    return BisetView(amb, GAction(amb.group, A.rows, check=False))


def left_action_of_biset(U: BisetView) -> GAction:
    """Forget a trivial right side."""
    if U.right.order != 1:
        raise ValueError("right group must be trivial")
    return GAction(U.left, U.action.rows, check=False)


# -- elementary bisets -----------------------------------------------

def restriction_biset(S: Subgroup) -> BisetView:
    """Restriction to a subgroup: the (H, G)-biset on G with H = S."""
    G = S.parent
    Hg = S.as_group()
    amb = product_group(Hg, G)
    X = ProductSubgroup(
        amb, [amb.encode(i, S.from_local(i)) for i in range(Hg.order)],
        check=False)
    return biset_coset(X)


def induction_biset(S: Subgroup) -> BisetView:
    """Induction from a subgroup: the (G, H)-biset on G with H = S."""
    G = S.parent
    Hg = S.as_group()
    amb = product_group(G, Hg)
    X = ProductSubgroup(
        amb, [amb.encode(S.from_local(i), i) for i in range(Hg.order)],
        check=False)
    return biset_coset(X)


def inflation_biset(G: FiniteGroup, N: Subgroup) -> BisetView:
    """Inflation along G -> G/N as a (G, G/N)-biset."""
    Q, pi = quotient(G, N)
    amb = product_group(G, Q)
    X = ProductSubgroup(amb, [amb.encode(g, pi(g)) for g in range(G.order)],
                        check=False)
    return biset_coset(X)


def deflation_biset(G: FiniteGroup, N: Subgroup) -> BisetView:
    """Deflation along G -> G/N as a (G/N, G)-biset."""
    Q, pi = quotient(G, N)
    amb = product_group(Q, G)
    X = ProductSubgroup(amb, [amb.encode(pi(g), g) for g in range(G.order)],
                        check=False)
    return biset_coset(X)


def isomorphism_biset(alpha: GroupHom) -> BisetView:
    """Transport along an isomorphism alpha as a (target, source)-biset."""
    if not alpha.is_isomorphism():
        raise ValueError("alpha must be an isomorphism")
    amb = product_group(alpha.target, alpha.source)
    X = ProductSubgroup(
        amb, [amb.encode(alpha(g), g) for g in range(alpha.source.order)],
        check=False)
    return biset_coset(X)


def conjugation_biset(S: Subgroup, x: int) -> BisetView:
    """Conjugation by x as a (xSx^-1, S)-biset."""
    G = S.parent
    Sc = S.conjugated_by(x)
    amb = product_group(Sc.as_group(), S.as_group())
    X = ProductSubgroup(
        amb,
        [amb.encode(Sc.to_local(G.conj(x, S.from_local(i))), i)
         for i in range(S.order)],
        check=False)
    return biset_coset(X)


def elementary_biset(kind: str, **data) -> BisetView:
    """Dispatch on the five elementary kinds plus conjugation."""
    if kind == "res":
        return restriction_biset(data["subgroup"])
    if kind == "ind":
        return induction_biset(data["subgroup"])
    if kind == "inf":
        return inflation_biset(data["group"], data["normal"])
    if kind == "def":
        return deflation_biset(data["group"], data["normal"])
    if kind == "iso":
        return isomorphism_biset(data["alpha"])
    if kind == "con":
        return conjugation_biset(data["subgroup"], data["element"])
    raise ValueError(f"unknown elementary biset kind {kind!r}")


# -- tensor products -------------------------------------------------

def _orbit_labels(size: int, rows) -> tuple[list[int], list[int]]:
    """Label points by orbit under the given permutations.

    Returns (label per point, representative point per orbit); sweeping
    points in increasing order makes each representative the orbit
    minimum.
    """
    label = [-1] * size
    reps = []
    for x in range(size):
        if label[x] >= 0:
            continue
        k = len(reps)
        reps.append(x)
        stack = [x]
        label[x] = k
        while stack:
            y = stack.pop()
            for row in rows:
                z = row[y]
                if label[z] < 0:
                    label[z] = k
                    stack.append(z)
    return label, reps


def tensor_direct(U: BisetView, V: BisetView,
                  cap: int = TENSOR_POINT_CAP) -> BisetView:
    """The tensor product over the middle group, on orbits of pairs.

    Pairs (u, v) are glued along (u.h, v) ~ (u, h.v); the result is a
    (G, K)-biset with (g,k) acting on the class of (u, v) through its
    representatives.
    """
    if U.ambient.right is not V.ambient.left:
        raise ValueError("tensor requires matching middle group")
    H = U.ambient.right
    nu, nv = U.size, V.size
    if nu * nv > cap:
        raise ValueError(f"tensor product would exceed {cap} points")
    glue = []
    for h in range(H.order):
        if h == H.identity:
            continue
        # h.(u, v) = (u.h^-1, h.v): both via the (1,h) / (h,1) actions.
        ur = U.action.rows[U.ambient.encode(U.left.identity, h)]
        vr = V.action.rows[V.ambient.encode(h, V.right.identity)]
        glue.append(tuple(ur[p // nv] * nv + vr[p % nv]
                          for p in range(nu * nv)))
    label, reps = _orbit_labels(nu * nv, glue)
    amb = product_group(U.left, V.right)
    rows = []
    for x in range(amb.group.order):
        g, k = amb.decode(x)
        gr = U.action.rows[U.ambient.encode(g, U.right.identity)]
        kr = V.action.rows[V.ambient.encode(V.left.identity, k)]
        rows.append(tuple(label[gr[r // nv] * nv + kr[r % nv]]
                          for r in reps))
    return BisetView(amb, GAction(amb.group, rows, check=False))


def tensor_mackey(X: ProductSubgroup, Y: ProductSubgroup
                  ) -> TransitiveDecomposition:
    """Decomposition of (cosets of X) tensor (cosets of Y) by double cosets.

    One summand per double coset p2(X) h p1(Y) of the middle group, with
    stabilizer X * (h,1)-conjugate of Y.
    """
    if X.ambient.right is not Y.ambient.left:
        raise ValueError("matching middle group required")
    H = X.ambient.right
    amb_out = product_group(X.ambient.left, Y.ambient.right)
    items: Counter = Counter()
    for h in double_cosets(H, X.p2, Y.p1):
        pid = Y.ambient.encode(h, Y.ambient.right.identity)
        Yh = Y.conjugated_by_pair(pid)
        Z = star(X, Yh)
        key = Subgroup(amb_out.group, Z.elements,
                       check=False).canonical_conjugate().elements
        items[key] += 1
    return TransitiveDecomposition(amb_out.group, tuple(sorted(items.items())))


def extended_tensor(X: ProductSubgroup, Y: ProductSubgroup,
                    U: GAction, V: GAction, check: bool = True) -> GAction:
    """Tensor an X-set and a Y-set into an (X * Y)-set.

    Points are orbits of pairs under the joint kernel k2(X) & k1(Y);
    (g,k) acts through any middle witness h with (g,h) in X and (h,k) in
    Y.  With check=True the result is recomputed through a second
    witness where one exists and compared.
    """
    Xg, Yg = X.as_group(), Y.as_group()
    if U.group is not Xg or V.group is not Yg:
        raise ValueError("U and V must be actions of the local groups")
    H = X.ambient.right
    ker = middle_kernel(X, Y)
    nu, nv = U.size, V.size
    if nu * nv > TENSOR_POINT_CAP:
        raise ValueError("extended tensor product too large")
    glue = []
    for t in ker.elements:
        if t == H.identity:
            continue
        # t.(u, v) = (u.t^-1, t.v) through (1,t) in X and (t,1) in Y.
        ur = U.rows[X.to_local(X.ambient.encode(X.ambient.left.identity, t))]
        vr = V.rows[Y.to_local(Y.ambient.encode(t, Y.ambient.right.identity))]
        glue.append(tuple(ur[p // nv] * nv + vr[p % nv]
                          for p in range(nu * nv)))
    label, reps = _orbit_labels(nu * nv, glue)
    S = star(X, Y)
    Sg = S.as_group()
    witnesses = middle_witnesses(X, Y)

    def row_via(g: int, k: int, h: int):
        ur = U.rows[X.to_local(X.ambient.encode(g, h))]
        vr = V.rows[Y.to_local(Y.ambient.encode(h, k))]
        return tuple(label[ur[r // nv] * nv + vr[r % nv]] for r in reps)

    rows = []
    for s in Sg.local_to_parent:
        g, k = S.ambient.decode(s)
        hs = witnesses[(g, k)]
        row = row_via(g, k, hs[0])
        if check and len(hs) > 1 and row != row_via(g, k, hs[1]):
            raise AssertionError("middle witness changed the action")
        rows.append(row)
    return GAction(Sg, rows, check=False)


def defres_biset(X: ProductSubgroup, Y: ProductSubgroup) -> BisetView:
    """Deflation-restriction along the pullback map, as a biset.

    The (X*Y, X x Y)-biset of cosets of the graph {(nu(z), z)} of the
    natural surjection nu from the pullback X x_H Y onto X * Y.
    """
    data: PullbackData = pullback(X, Y)
    Sg = data.star_subgroup.as_group()
    Pg_parent = data.pullback.ambient.group
    amb = product_group(Sg, Pg_parent)
    Pg = data.pullback.as_group()
    elems = [amb.encode(data.nu(i), Pg.local_to_parent[i])
             for i in range(Pg.order)]
    Xsub = ProductSubgroup(amb, elems, check=False)
    return biset_coset(Xsub)


def check_defres_description(X: ProductSubgroup, Y: ProductSubgroup,
                             U: GAction, V: GAction) -> bool:
    """Extended tensor equals deflation-restriction of the plain product."""
    lhs = extended_tensor(X, Y, U, V)
    W = defres_biset(X, Y)
    UV = external_product(U, V)
    rhs = left_action_of_biset(
        tensor_direct(W, biset_from_left_action(UV)))
    return iso_check(lhs, rhs)


# -- induction of one-sided actions ----------------------------------

def induced_action(G: FiniteGroup, S: Subgroup, U: GAction) -> GAction:
    """Induce an S.as_group()-set to G along the inclusion.

    Points are (coset representative, point of U); g moves (t, u) to
    (t', s.u) where g t = t' s with t' the chosen representative.
    """
    if S.parent is not G:
        raise ValueError("S must be a subgroup of G")
    Sg = S.as_group()
    if U.group is not Sg:
        U = rebase_action(U, Sg)
    reps, idx = S.coset_index_map()
    n = U.size
    rows = []
    for g in range(G.order):
        row = []
        for ti, t in enumerate(reps):
            gt = G.table[g][t]
            tj = idx[gt]
            s = Sg.parent_to_local[G.table[G.inv(reps[tj])][gt]]
            sr = U.rows[s]
            row.extend(tj * n + sr[u] for u in range(n))
        rows.append(tuple(row))
    return GAction(G, rows, check=False)


def conjugated_action(X: ProductSubgroup, x: int, U: GAction
                      ) -> tuple[ProductSubgroup, GAction]:
    """Transport an X-set along conjugation by an ambient element x.

    Returns the conjugate subgroup xXx^-1 with the transported action,
    where a in xXx^-1 acts as x^-1 a x did.
    """
    amb = X.ambient
    Xc = X.conjugated_by_pair(x)
    Xg, Xcg = X.as_group(), Xc.as_group()
    G = amb.group
    xinv = G.inv(x)
    rows = [U.rows[Xg.parent_to_local[G.conj(xinv, Xcg.local_to_parent[i])]]
            for i in range(Xcg.order)]
    return Xc, GAction(Xcg, rows, check=False)


def sub_in_local(outer: ProductSubgroup, inner: ProductSubgroup) -> Subgroup:
    """inner viewed as a subgroup of outer.as_group()."""
    if not inner.element_set <= outer.element_set:
        raise ValueError("inner must be contained in outer")
    Og = outer.as_group()
    return Subgroup(Og, [Og.parent_to_local[e] for e in inner.elements],
                    check=False)


def extended_induction_formula(X: ProductSubgroup, Y: ProductSubgroup,
                               Xp: ProductSubgroup, Yp: ProductSubgroup,
                               U: GAction, V: GAction) -> dict:
    """Compare both sides of the double-coset formula for tensoring
    induced actions.

    The left side is the extended tensor of the inductions of U and V to
    X and Y.  The right side runs over double cosets of the pullback
    X x_H Y and Xp x Yp inside X x Y; each representative (x, y)
    contributes the induction, from the star of the conjugated
    subgroups, of the extended tensor of the conjugated actions.
    """
    if not (Xp.element_set <= X.element_set
            and Yp.element_set <= Y.element_set):
        raise ValueError("Xp, Yp must be subgroups of X, Y")
    Xg, Yg = X.as_group(), Y.as_group()
    IndU = induced_action(Xg, sub_in_local(X, Xp), U)
    IndV = induced_action(Yg, sub_in_local(Y, Yp), V)
    lhs = extended_tensor(X, Y, IndU, IndV)

    data = pullback(X, Y)
    PG = data.pullback.ambient
    A = Subgroup(PG.group, data.pullback.elements, check=False)
    B = Subgroup(PG.group,
                 [PG.encode(Xg.parent_to_local[e], Yg.parent_to_local[f])
                  for e in Xp.elements for f in Yp.elements], check=False)
    S = data.star_subgroup
    Sg = S.as_group()
    terms = []
    for rep in double_cosets(PG.group, A, B):
        lx, ly = PG.decode(rep)
        x_pid = Xg.local_to_parent[lx]
        y_pid = Yg.local_to_parent[ly]
        Xc, Uc = conjugated_action(Xp, x_pid, U)
        Yc, Vc = conjugated_action(Yp, y_pid, V)
        T = extended_tensor(Xc, Yc, Uc, Vc)
        sub = sub_in_local(S, star(Xc, Yc))
        terms.append(induced_action(Sg, sub, T))
    rhs = disjoint_union(*terms) if terms else trivial_action(Sg, 0)
    return {
        "lhs": lhs,
        "rhs": rhs,
        "double_coset_count": len(terms),
        "isomorphic": iso_check(lhs, rhs),
    }


def tensor_induced_bisets_formula(X: ProductSubgroup, Y: ProductSubgroup,
                                  Xp: ProductSubgroup, Yp: ProductSubgroup
                                  ) -> dict:
    """Biset form of the same double-coset formula.

    Left side: deflation-restriction along the pullback map composed
    with induction from Xp x Yp.  Right side, per double coset (x, y):
    induction from the star of the conjugates, composed with their
    deflation-restriction and with conjugation back by (x, y).  Each
    right-hand composite is transitive, so it is built directly as the
    coset biset of its stabilizer {(nu(w), (x,y)^-1 w (x,y))}, w over
    the pullback of the conjugated subgroups.
    """
    if not (Xp.element_set <= X.element_set
            and Yp.element_set <= Y.element_set):
        raise ValueError("Xp, Yp must be subgroups of X, Y")
    data = pullback(X, Y)
    PG = data.pullback.ambient
    PGg = PG.group
    rect = Subgroup(PGg, [PG.encode(X.to_local(e), Y.to_local(f))
                          for e in Xp.elements for f in Yp.elements],
                    check=False)
    lhs = tensor_direct(defres_biset(X, Y), induction_biset(rect))

    S = data.star_subgroup
    Sg = S.as_group()
    rectg = rect.as_group()
    amb_out = product_group(Sg, rectg)
    A = Subgroup(PGg, data.pullback.elements, check=False)
    GH, HK, GK = X.ambient, Y.ambient, S.ambient
    parts = []
    for rep in double_cosets(PGg, A, rect):
        lx, ly = PG.decode(rep)
        x_pid = X.from_local(lx)
        y_pid = Y.from_local(ly)
        Xc = Xp.conjugated_by_pair(x_pid)
        Yc = Yp.conjugated_by_pair(y_pid)
        xinv = GH.group.inv(x_pid)
        yinv = HK.group.inv(y_pid)
        elems = []
        for e in Xc.elements:
            g, h = GH.decode(e)
            for f in Yc.elements:
                h2, k = HK.decode(f)
                if h2 != h:
                    continue
                left_loc = Sg.parent_to_local[GK.encode(g, k)]
                e0 = GH.group.conj(xinv, e)
                f0 = HK.group.conj(yinv, f)
                right_loc = rectg.parent_to_local[
                    PG.encode(X.to_local(e0), Y.to_local(f0))]
                elems.append(amb_out.encode(left_loc, right_loc))
        parts.append(biset_coset(
            ProductSubgroup(amb_out, elems, check=False)).action)
    rhs = disjoint_union(*parts)
    return {
        "lhs": lhs.decompose(),
        "rhs": rhs.decompose(),
        "double_coset_count": len(parts),
        "isomorphic": lhs.decompose() == rhs.decompose(),
    }


def dual_biset(U: BisetView) -> BisetView:
    return U.opposite()
