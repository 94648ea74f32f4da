"""Cup products on the subset decomposition and ring presentations.

A class living on the full subcomplex over I pairs with one over J through
the juxtaposition product: zero unless I and J are disjoint, otherwise the
value on a simplex of K_{I union J} splits the simplex into its I-part and
J-part and multiplies the factor values with the sign of the shuffle sorting
them back together.  This realizes the cup product of the moment-angle
complex up to a per-class sign the sources leave free, so every golden
assertion downstream is stated up to sign or as a rank condition.

At the cochain level the product commutes up to (-1)^{(d1+1)(d2+1)} in the
reduced degrees (NOT the moment-angle total degrees: making the total-degree
sign literal would need a normalization of the degree-shifting isomorphism
that is not pinned down anywhere), and it is associative on the nose.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from .bitsets import is_subset, lex_key, shuffle_sign, vertices_of
from .complexes import SimplicialComplex
from .errors import DegreeMismatch, NotASubcomplex, TorsionWarning
from .hochster import BigradedBetti, bigraded_betti
from .homology import Abelian, ChainComplexZ, CohomologyBasis, Expression
from .snf import invariant_factors, is_unimodular_square


class HochsterClass:
    """A cochain on one full subcomplex, kept in parent vertex labels.

    ``subset`` is the vertex set the class lives on, ``degree`` the reduced
    cochain degree, ``cochain`` a mapping face mask -> coefficient over the
    degree-faces of the subcomplex.  The zero class is an empty cochain.
    """

    __slots__ = ("subset", "degree", "cochain")

    def __init__(self, subset: int, degree: int, cochain: dict):
        clean = {}
        for face, coeff in cochain.items():
            if not coeff:
                continue
            if not is_subset(face, subset):
                raise DegreeMismatch(
                    f"face {vertices_of(face)} is not inside {vertices_of(subset)}"
                )
            if face.bit_count() != degree + 1:
                raise DegreeMismatch(
                    f"face {vertices_of(face)} has the wrong cardinality for degree {degree}"
                )
            clean[face] = coeff
        self.subset = subset
        self.degree = degree
        self.cochain = clean

    @property
    def total_degree(self) -> int:
        return self.subset.bit_count() + self.degree + 1

    @property
    def is_zero(self) -> bool:
        return not self.cochain

    def items(self):
        return sorted(self.cochain.items(), key=lambda kv: lex_key(kv[0]))

    def __eq__(self, other):
        if not isinstance(other, HochsterClass):
            return NotImplemented
        return (
            self.subset == other.subset
            and self.degree == other.degree
            and self.cochain == other.cochain
        )

    def __neg__(self):
        return HochsterClass(
            self.subset, self.degree, {f: -c for f, c in self.cochain.items()}
        )

    def __repr__(self):
        support = [(vertices_of(f), c) for f, c in self.items()]
        return (
            f"HochsterClass(J={vertices_of(self.subset)}, d={self.degree}, "
            f"cochain={support})"
        )


def _assert_cocycle(cls: HochsterClass, complex_: SimplicialComplex) -> None:
    up_faces = [
        f
        for f in complex_.faces_by_dim().get(cls.degree + 1, [])
        if is_subset(f, cls.subset)
    ]
    for face in up_faces:
        total = 0
        sign = 1
        for v in vertices_of(face):
            sub = face & ~(1 << (v - 1))
            coeff = cls.cochain.get(sub)
            if coeff:
                total += sign * coeff
            sign = -sign
        assert total == 0, "juxtaposition product failed to be a cocycle"


def star_product(
    c1: HochsterClass, c2: HochsterClass, complex_: SimplicialComplex
) -> HochsterClass:
    """Juxtaposition product of two classes; zero when supports overlap."""
    union = c1.subset | c2.subset
    degree = c1.degree + c2.degree + 1
    if c1.subset & c2.subset:
        return HochsterClass(union, degree, {})
    cochain = {}
    for face in complex_.faces_by_dim().get(degree, []):
        if not is_subset(face, union):
            continue
        left = face & c1.subset
        if left.bit_count() != c1.degree + 1:
            continue
        right = face & c2.subset
        a = c1.cochain.get(left)
        if not a:
            continue
        b = c2.cochain.get(right)
        if not b:
            continue
        cochain[face] = a * b * shuffle_sign(left, right)
    result = HochsterClass(union, degree, cochain)
    _assert_cocycle(result, complex_)
    return result


@dataclass
class RingGenerator:
    gid: int
    subset: int
    degree: int  # reduced cochain degree
    index: int  # position within the (subset, degree) basis
    cls: HochsterClass

    @property
    def total_degree(self) -> int:
        return self.subset.bit_count() + self.degree + 1

    def address(self) -> tuple:
        return (self.subset, self.degree, self.index)


class _BlockContext:
    """Cohomology basis of one full subcomplex, faces in parent labels."""

    def __init__(self, complex_: SimplicialComplex, subset: int):
        self.subset = subset
        self.cc = ChainComplexZ.of_subset(complex_, subset)
        self.basis = CohomologyBasis(self.cc)

    def express(self, cls: HochsterClass) -> Expression:
        faces = self.cc.faces.get(cls.degree, [])
        vec = [cls.cochain.get(f, 0) for f in faces]
        extra = set(cls.cochain) - set(faces)
        if extra:
            raise DegreeMismatch(
                f"cochain supported outside the subcomplex: {sorted(map(vertices_of, extra))}"
            )
        return self.basis.express(vec, cls.degree)

    def classes(self, degree: int) -> list:
        faces = self.cc.faces.get(degree, [])
        out = []
        for rep in self.basis.representatives(degree):
            cochain = {f: c for f, c in zip(faces, rep) if c}
            out.append(HochsterClass(self.subset, degree, cochain))
        return out


@dataclass
class RingPresentation:
    """Additive basis of the moment-angle cohomology with all pair products.

    Generators cover every nonzero (subset, degree) block of positive total
    degree (the unit class is left implicit).  ``products[(g, h)]`` lists
    (generator id, coefficient) pairs expressing the product of the free
    representatives; torsion blocks are excluded with a warning.
    """

    complex: SimplicialComplex
    table: BigradedBetti
    generators: list
    products: dict
    fundamental_id: int | None
    has_torsion: bool
    _contexts: dict = field(default_factory=dict, repr=False)
    _by_address: dict = field(default_factory=dict, repr=False)

    def context(self, subset: int) -> _BlockContext:
        ctx = self._contexts.get(subset)
        if ctx is None:
            ctx = _BlockContext(self.complex, subset)
            self._contexts[subset] = ctx
        return ctx

    def generator(self, gid: int) -> RingGenerator:
        return self.generators[gid]

    def find(self, subset, degree: int, index: int = 0) -> RingGenerator:
        """Generator by its (subset, degree, index) address."""
        if not isinstance(subset, int):
            from .bitsets import mask_of

            subset = mask_of(subset)
        return self._by_address[(subset, degree, index)]

    def block_generators(self, subset: int, degree: int) -> list:
        return [
            g for g in self.generators if g.subset == subset and g.degree == degree
        ]

    def degree_generators(self, p: int) -> list:
        return [g for g in self.generators if g.total_degree == p]

    def express_class(self, cls: HochsterClass) -> list:
        """Coefficients of a class over the generators of its block."""
        expr = self.context(cls.subset).express(cls)
        block = self.block_generators(cls.subset, cls.degree)
        assert len(expr.free) == len(block)
        return [
            (g.gid, coeff) for g, coeff in zip(block, expr.free) if coeff
        ]

    def product(self, gid1: int, gid2: int) -> tuple:
        return self.products[(gid1, gid2)]

    def product_class(self, gids) -> HochsterClass:
        """Fold the juxtaposition product over a sequence of generators."""
        gids = list(gids)
        cls = self.generators[gids[0]].cls
        for gid in gids[1:]:
            cls = star_product(cls, self.generators[gid].cls, self.complex)
            if cls.is_zero:
                return cls
        return cls

    def coefficient_on(self, cls: HochsterClass, gid: int) -> int:
        for g, coeff in self.express_class(cls):
            if g == gid:
                return coeff
        return 0


def ring_presentation(
    complex_: SimplicialComplex,
    *,
    table: BigradedBetti | None = None,
    **kwargs,
) -> RingPresentation:
    """Choose deterministic free bases per block and multiply them out."""
    if table is None:
        table = bigraded_betti(complex_, **kwargs)
    has_torsion = any(g.torsion for g in table.entries.values())
    if has_torsion:
        warnings.warn(
            "torsion classes present; the presentation restricts to free parts",
            TorsionWarning,
            stacklevel=2,
        )
    presentation = RingPresentation(
        complex=complex_,
        table=table,
        generators=[],
        products={},
        fundamental_id=None,
        has_torsion=has_torsion,
    )
    keys = [
        (subset, d)
        for (subset, d) in table.sorted_keys()
        if subset.bit_count() + d + 1 > 0 and table.entries[(subset, d)].rank > 0
    ]
    keys.sort(key=lambda key: (key[0].bit_count() + key[1] + 1, lex_key(key[0]), key[1]))
    for subset, d in keys:
        ctx = presentation.context(subset)
        for index, cls in enumerate(ctx.classes(d)):
            gid = len(presentation.generators)
            gen = RingGenerator(gid=gid, subset=subset, degree=d, index=index, cls=cls)
            presentation.generators.append(gen)
            presentation._by_address[(subset, d, index)] = gen
    full = (1 << complex_.m) - 1
    top = presentation._by_address.get((full, complex_.dim(), 0))
    if top is not None and table.group(full, complex_.dim()) == Abelian(1, ()):
        presentation.fundamental_id = top.gid
    for g in presentation.generators:
        for h in presentation.generators:
            prod = star_product(g.cls, h.cls, complex_)
            if prod.is_zero:
                presentation.products[(g.gid, h.gid)] = ()
            else:
                presentation.products[(g.gid, h.gid)] = tuple(
                    presentation.express_class(prod)
                )
    return presentation


def triple_product_rank(presentation: RingPresentation, target_degree: int) -> int:
    """Rank of the span of products of three or more distinct generators."""
    return product_span_rank(presentation, 3, target_degree)


def product_span_rank(presentation: RingPresentation, t: int, target_degree: int) -> int:
    """Rank of the span of products of >= t distinct generators in a degree.

    Products expand multilinearly over any basis, so the span over basis
    generators equals the span over arbitrary classes; the rank is a ring
    invariant even though individual products are not.
    """
    gens = presentation.generators
    target_block = [g.gid for g in presentation.degree_generators(target_degree)]
    offset = {gid: i for i, gid in enumerate(target_block)}
    vectors = []

    def extend(start: int, chosen: list, support: int, degree: int):
        if len(chosen) >= t and degree == target_degree:
            cls = presentation.product_class(chosen)
            if not cls.is_zero:
                row = [0] * len(target_block)
                for gid, coeff in presentation.express_class(cls):
                    row[offset[gid]] = coeff
                if any(row):
                    vectors.append(row)
        for idx in range(start, len(gens)):
            g = gens[idx]
            if g.subset & support:
                continue
            new_degree = degree + g.total_degree
            if new_degree > target_degree:
                continue
            chosen.append(g.gid)
            extend(idx + 1, chosen, support | g.subset, new_degree)
            chosen.pop()

    extend(0, [], 0, 0)
    if not vectors:
        return 0
    return len(invariant_factors(vectors))


@dataclass
class PairingReport:
    ok: bool
    top: int
    failures: list

    def __bool__(self) -> bool:
        return self.ok


def poincare_pairing_report(presentation: RingPresentation) -> PairingReport:
    """Unimodularity of the product pairing in all complementary degrees.

    For each p the matrix pairs generators of degree p against generators of
    degree top - p through the coefficient on the fundamental class; for a
    sphere candidate this must be square and have determinant +-1.
    """
    complex_ = presentation.complex
    top = complex_.m + complex_.dim() + 1
    fid = presentation.fundamental_id
    failures = []
    if fid is None:
        return PairingReport(ok=False, top=top, failures=[("no fundamental class", None)])
    for p in range(1, top // 2 + 1):
        left = presentation.degree_generators(p)
        right = presentation.degree_generators(top - p)
        if len(left) != len(right):
            failures.append((p, f"rank mismatch {len(left)} vs {len(right)}"))
            continue
        if not left:
            continue
        matrix = []
        for g in left:
            row = []
            for h in right:
                coeff = 0
                for gid, c in presentation.products[(g.gid, h.gid)]:
                    if gid == fid:
                        coeff = c
                row.append(coeff)
            matrix.append(row)
        if not is_unimodular_square(matrix):
            failures.append((p, matrix))
    return PairingReport(ok=not failures, top=top, failures=failures)


@dataclass
class FunctorialityReport:
    ok: bool
    pairs_checked: int
    first_failure: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


def _push_class(cls: HochsterClass, parents: tuple) -> HochsterClass:
    """Relabel a class on a full subcomplex into parent coordinates."""
    from .bitsets import mask_of

    def push_mask(mask: int) -> int:
        return mask_of(parents[i - 1] for i in vertices_of(mask))

    return HochsterClass(
        push_mask(cls.subset),
        cls.degree,
        {push_mask(f): c for f, c in cls.cochain.items()},
    )


def functoriality_check(
    complex_: SimplicialComplex,
    subset,
    *,
    max_pairs: int = 64,
    sub_kwargs: dict | None = None,
) -> FunctorialityReport:
    """Products computed inside a full subcomplex match the ambient ones.

    The inclusion of the subcomplex is order-preserving, so pushing classes
    through the recorded relabeling must commute with the cochain-level
    product exactly, not just up to coboundary.
    """
    from .bitsets import mask_of

    if not isinstance(subset, int):
        subset = mask_of(subset)
    if subset & ~((1 << complex_.m) - 1):
        raise NotASubcomplex(f"{vertices_of(subset)} is not within 1..{complex_.m}")
    sub = complex_.full_subcomplex(subset)
    parents = sub.parent_vertices
    sub_table = bigraded_betti(sub, **(sub_kwargs or {}))
    sub_pres = ring_presentation(sub, table=sub_table)
    checked = 0
    for g in sub_pres.generators:
        for h in sub_pres.generators:
            if checked >= max_pairs:
                break
            inner = star_product(g.cls, h.cls, sub)
            pushed_inner = _push_class(inner, parents)
            outer = star_product(
                _push_class(g.cls, parents), _push_class(h.cls, parents), complex_
            )
            checked += 1
            if pushed_inner != outer:
                return FunctorialityReport(
                    ok=False,
                    pairs_checked=checked,
                    first_failure=(g.address(), h.address()),
                )
    return FunctorialityReport(ok=True, pairs_checked=checked)


def ring_json_obj(presentation: RingPresentation) -> dict:
    """Stable JSON form: generator addresses and integer structure constants."""
    gens = [
        {
            "id": g.gid,
            "J": list(vertices_of(g.subset)),
            "d": g.degree,
            "p": g.total_degree,
            "index": g.index,
        }
        for g in presentation.generators
    ]
    products = []
    for (a, b), terms in sorted(presentation.products.items()):
        if terms:
            products.append(
                {"g": a, "h": b, "terms": [[gid, coeff] for gid, coeff in terms]}
            )
    return {
        "m": presentation.complex.m,
        "dim": presentation.complex.dim(),
        "torsion_excluded": presentation.has_torsion,
        "fundamental": presentation.fundamental_id,
        "generators": gens,
        "products": products,
    }
