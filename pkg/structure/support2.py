"""
Support-2 profiles: per-edge exponent tables, standard weightings,
polarization and the Artinian fold of a whiskered profile
"""
from dataclasses import dataclass
from typing import TYPE_CHECKING, Dict, List, Optional, Tuple
from algebra.monomial import Monomial, RingContext, render
from algebra.ideal import MonomialIdeal, from_generators, is_squarefree, relabel
from utils.errors import DomainError, NotSupport2Error

if TYPE_CHECKING:
    from structure.graphs import WhiskerStructure


@dataclass(frozen=True)
class EdgeProfile:
    """
    The generators T_{i,j} supported on one edge {i, j}, i < j

    `pairs` holds (w_ij, w_ji) per generator with w_ij strictly decreasing,
    so w_ji is strictly increasing.
    """
    i: int
    j: int
    pairs: Tuple[Tuple[int, int], ...]

    @property
    def alpha(self) -> int:
        return len(self.pairs)

    def _side(self, a: int) -> int:
        if a == self.i:
            return 0
        if a == self.j:
            return 1
        raise DomainError(f"x{a} is not an endpoint of edge {{{self.i}, {self.j}}}")

    def w(self, a: int, t: int = 1) -> int:
        """Exponent of x_a in the t-th generator (1-based, sorted by x_i's exponent)"""
        if not 1 <= t <= self.alpha:
            raise DomainError(f"edge {{{self.i}, {self.j}}} has {self.alpha} generators, asked for #{t}")
        return self.pairs[t - 1][self._side(a)]

    def mu(self, a: int) -> int:
        """Largest exponent of x_a on this edge"""
        side = self._side(a)
        return max(p[side] for p in self.pairs)

    def nu(self, a: int) -> int:
        """Smallest exponent of x_a on this edge"""
        side = self._side(a)
        return min(p[side] for p in self.pairs)

    def other(self, a: int) -> int:
        return self.j if self._side(a) == 0 else self.i

    def generators(self, ring: RingContext) -> List[Monomial]:
        return [ring.from_powers({self.i: a, self.j: b}) for a, b in self.pairs]


@dataclass(frozen=True)
class Support2Profile:
    """
    A support-2 ideal split into its edge tables T_{i,j}

    The edges are sorted by (i, j); `source` is the analyzed ideal.
    """
    source: MonomialIdeal
    edges: Tuple[EdgeProfile, ...]

    @property
    def ring(self) -> RingContext:
        return self.source.ring

    @property
    def n(self) -> int:
        return self.source.ring.n

    def edge_keys(self) -> List[Tuple[int, int]]:
        return [(e.i, e.j) for e in self.edges]

    def has_edge(self, a: int, b: int) -> bool:
        key = (min(a, b), max(a, b))
        return any((e.i, e.j) == key for e in self.edges)

    def edge(self, a: int, b: int) -> EdgeProfile:
        key = (min(a, b), max(a, b))
        for e in self.edges:
            if (e.i, e.j) == key:
                return e
        raise DomainError(f"{{{a}, {b}}} is not an edge of G(I)")

    def w(self, a: int, b: int, t: int = 1) -> int:
        """w^t_{a,b}: exponent of x_a in the t-th generator on edge {a, b}"""
        return self.edge(a, b).w(a, t)

    def alpha(self, a: int, b: int) -> int:
        return self.edge(a, b).alpha

    def mu(self, a: int, b: int) -> int:
        return self.edge(a, b).mu(a)

    def nu(self, a: int, b: int) -> int:
        return self.edge(a, b).nu(a)

    def neighbors(self, a: int) -> List[int]:
        return sorted(e.other(a) for e in self.edges if a in (e.i, e.j))

    def vertices(self) -> List[int]:
        """Variables that occur in some generator"""
        return sorted({v for e in self.edges for v in (e.i, e.j)})

    def max_alpha(self) -> int:
        return max(e.alpha for e in self.edges)

    def generators(self) -> List[Monomial]:
        """Flatten the edge tables back into G(I)"""
        gens = [g for e in self.edges for g in e.generators(self.ring)]
        return sorted(gens, key=Monomial.sort_key)


@dataclass(frozen=True)
class StandardWeighting:
    """x_i -> x_i^{d_i}; `defaulted` lists isolated variables given d_i = 1"""
    d: Tuple[int, ...]
    defaulted: Tuple[int, ...] = ()

    def __post_init__(self):
        for i, di in enumerate(self.d, start=1):
            if di < 1:
                raise DomainError(f"weighting d_{i} must be >= 1, got {di}")


def analyze(I: MonomialIdeal) -> Support2Profile:
    """
    Split G(I) into edge tables

    Raises:
        DomainError: for the zero or unit ideal
        NotSupport2Error: naming the first generator whose support is not 2
    """
    if not I.is_proper_nonzero():
        raise DomainError("support-2 analysis needs a proper nonzero ideal")
    tables: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}
    for g in I.generators:
        support = g.support()
        if len(support) != 2:
            raise NotSupport2Error(render(g), len(support))
        i, j = support
        tables.setdefault((i, j), []).append((g.exponent(i), g.exponent(j)))
    edges = tuple(
        EdgeProfile(i, j, tuple(sorted(pairs, reverse=True)))
        for (i, j), pairs in sorted(tables.items())
    )
    return Support2Profile(source=I, edges=edges)


def detect_standard_weighting(p: Support2Profile) -> Optional[StandardWeighting]:
    """
    The standard linear weighting d with I = (√I)_d, if one exists

    Exists iff every edge carries one generator and every vertex has the same
    exponent on all of its edges.
    """
    if p.max_alpha() > 1:
        return None
    seen: Dict[int, int] = {}
    for e in p.edges:
        for v in (e.i, e.j):
            exponent = e.w(v)
            if seen.setdefault(v, exponent) != exponent:
                return None
    defaulted = tuple(v for v in range(1, p.n + 1) if v not in seen)
    return StandardWeighting(tuple(seen.get(v, 1) for v in range(1, p.n + 1)), defaulted)


def apply_weighting(J: MonomialIdeal, weighting: StandardWeighting) -> MonomialIdeal:
    """
    J_w: substitute x_i -> x_i^{d_i} in a squarefree ideal

    Raises:
        DomainError: if J is not squarefree or d has the wrong length
    """
    if not is_squarefree(J):
        raise DomainError("standard weightings apply to squarefree ideals only")
    if len(weighting.d) != J.ring.n:
        raise DomainError(f"weighting has {len(weighting.d)} entries for {J.ring.n} variables")
    gens = [Monomial(tuple(e * d for e, d in zip(g.exponents, weighting.d))) for g in J.generators]
    return from_generators(J.ring, gens)


@dataclass(frozen=True)
class PolarizationMap:
    """
    Flat indexing of polarized variables

    x_{i,j} (1 <= j <= blocks[i-1]) is flat variable offset(i) + j.
    """
    blocks: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.blocks)

    @property
    def ring(self) -> RingContext:
        return RingContext(sum(self.blocks))

    def offset(self, i: int) -> int:
        return sum(self.blocks[: i - 1])

    def index(self, i: int, j: int) -> int:
        if not 1 <= j <= self.blocks[i - 1]:
            raise DomainError(f"x{i},{j} is not a polarized variable")
        return self.offset(i) + j

    def source_of(self, flat: int) -> Tuple[int, int]:
        """Inverse of `index`"""
        for i, p in enumerate(self.blocks, start=1):
            if flat <= p:
                return i, flat
            flat -= p
        raise DomainError("flat index outside the polarized ring")

    def entries(self) -> List[Tuple[int, int, int]]:
        """(i, j, flat) for every polarized variable"""
        return [(i, j, self.index(i, j)) for i, p in enumerate(self.blocks, start=1) for j in range(1, p + 1)]


def polarize(I: MonomialIdeal) -> Tuple[MonomialIdeal, PolarizationMap]:
    """
    Replace x_i^a by x_{i,1} ... x_{i,a}

    Returns:
        The squarefree polarization over p_1 + ... + p_n variables, where p_i
        is the largest exponent of x_i in G(I), and the index map
    """
    if not I.is_proper_nonzero():
        raise DomainError("polarization needs a proper nonzero ideal")
    blocks = tuple(max(g.exponents[k] for g in I.generators) for k in range(I.ring.n))
    pmap = PolarizationMap(blocks)
    target = pmap.ring
    gens = []
    for g in I.generators:
        exps = [0] * target.n
        for i, a in enumerate(g.exponents, start=1):
            for j in range(1, a + 1):
                exps[pmap.index(i, j) - 1] = 1
        gens.append(Monomial(tuple(exps)))
    return from_generators(target, gens), pmap


def depolarize(J: MonomialIdeal, pmap: PolarizationMap) -> MonomialIdeal:
    """Substitute x_{i,j} -> x_i"""
    if J.ring.n != sum(pmap.blocks):
        raise DomainError("ideal does not live in the polarized ring of this map")
    ring = RingContext(pmap.n)
    gens = []
    for g in J.generators:
        exps = [0] * ring.n
        for flat in g.support():
            i, _ = pmap.source_of(flat)
            exps[i - 1] += g.exponent(flat)
        gens.append(Monomial(tuple(exps)))
    return from_generators(ring, gens)


def relabeled_profile(p: Support2Profile, whisker: "WhiskerStructure") -> Support2Profile:
    """The profile with cores on 1..m and the whisker of core i on m+i"""
    return analyze(relabel(p.source, whisker.mapping()))


def whisker_condition(p: Support2Profile, whisker: "WhiskerStructure") -> bool:
    """
    Every whisker edge carries one generator and w_{i,m+i} >= μ_{i,j} for
    every core neighbor j, on the relabeled profile
    """
    q = relabeled_profile(p, whisker)
    m = whisker.m
    for i in range(1, m + 1):
        if q.alpha(i, m + i) != 1:
            return False
        w = q.w(i, m + i)
        for j in q.neighbors(i):
            if j <= m and w < q.mu(i, j):
                return False
    return True


def artinian_fold(p: Support2Profile, whisker: "WhiskerStructure") -> MonomialIdeal:
    """
    Identify x_i = x_{m+i} = u_i on the relabeled whiskered profile

    Returns:
        J over m variables generated by u_i^{w_{i,m+i} + w_{m+i,i}} and the
        core-edge generators u_i^{w^t_{i,j}} u_j^{w^t_{j,i}}

    Raises:
        DomainError: if the whisker condition fails or J is not Artinian
    """
    if not whisker_condition(p, whisker):
        raise DomainError("artinian fold needs alpha = 1 on whiskers and w_{i,m+i} >= mu_{i,j}")
    q = relabeled_profile(p, whisker)
    m = whisker.m
    ring = RingContext(m)
    gens = [ring.var(i, q.w(i, m + i) + q.w(m + i, i)) for i in range(1, m + 1)]
    for e in q.edges:
        if e.j <= m:
            gens.extend(ring.from_powers({e.i: a, e.j: b}) for a, b in e.pairs)
    J = from_generators(ring, gens)
    for i in range(1, m + 1):
        if not any(g.support() == (i,) for g in J.generators):
            raise DomainError(f"artinian fold has no pure power of u{i}")
    return J


def fold_variable_map(p: Support2Profile, whisker: "WhiskerStructure") -> Dict[Tuple[int, int], Tuple[int, int]]:
    """
    φ on polarized variables: u_{i,j} -> x_{i,j} for j <= w_{i,m+i},
    else x_{m+i, j - w_{i,m+i}}
    """
    q = relabeled_profile(p, whisker)
    m = whisker.m
    phi = {}
    for i in range(1, m + 1):
        w = q.w(i, m + i)
        for j in range(1, w + q.w(m + i, i) + 1):
            phi[(i, j)] = (i, j) if j <= w else (m + i, j - w)
    return phi


def polarization_identity_holds(p: Support2Profile, whisker: "WhiskerStructure") -> bool:
    """polarize(I) equals φ(polarize(J)) for the relabeled I and its Artinian fold J"""
    q = relabeled_profile(p, whisker)
    pol_i, map_i = polarize(q.source)
    pol_j, map_j = polarize(artinian_fold(p, whisker))
    phi = fold_variable_map(p, whisker)
    mapping = {}
    for i, j, flat in map_j.entries():
        target = phi[(i, j)]
        if target[0] > map_i.n or target[1] > map_i.blocks[target[0] - 1]:
            return False
        mapping[flat] = map_i.index(*target)
    return relabel(pol_j, mapping, pol_i.ring) == pol_i
