"""Boundary gluings of two copies of T^2 x D^2 and their invariants.

A closed 4-manifold is formed by gluing two copies of T^2 x D^2 along
their boundary 3-tori.  Up to isotopy the gluing is a 3x3 unimodular
matrix acting on first homology of the 3-torus in the fixed ordered basis

    (alpha, beta, gamma),

where alpha and beta generate the torus factor and gamma is the meridian,
the boundary circle of the disc factor.  Convention, used everywhere:
columns are the images of the basis vectors, and composition of maps is
the matrix product with the outer map on the left.

The module computes the fundamental group of such a gluing, decides when
the result has the homology of S^1 x S^3, composes the gluing induced by
a pair of multiplicity/direction surgeries on two torus fibers of
S^1 x S^3, and constructively reduces any determinant +1 gluing with
coprime meridian data to a small normal form.  Every reduction step is a
left or right multiplication by a matrix whose boundary map extends over
T^2 x D^2, and the steps are recorded in an independently checkable
certificate.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import lru_cache

from .abelian import (
    FgAbelianGroup,
    Presentation,
    group_from_presentation,
    is_isomorphic,
)
from .linalg import (
    IntMatrix,
    NotPrimitiveError,
    UnimodularMatrix,
    complete_primitive_to_sl3,
    determinant,
    inverse_unimodular,
    sl2_carry_to_e1,
)

#: Serialization tag for the basis/composition convention fixed above.
CONVENTION = "columns-are-images-alpha-beta-gamma"


class OrientationError(ValueError):
    """Determinant is -1 where +1 is required; normalize_to_sl3 first."""


class NotHomologyHopfError(ValueError):
    """The meridian-image pair (g, h) is not coprime."""


class ReductionError(RuntimeError):
    """A reduction produced something other than the promised output."""


_FLIP = IntMatrix([[1, 0, 0], [0, 1, 0], [0, 0, -1]])  # meridian sign flip


class GluingMatrix:
    """A 3x3 unimodular matrix in the (alpha, beta, gamma) convention.

    The last column is the image of the meridian; its entries are exposed
    as ``g``, ``h`` (torus directions) and ``k`` (meridian coefficient).
    """

    __slots__ = ("m",)

    def __init__(self, m):
        if isinstance(m, GluingMatrix):
            m = m.m
        if not isinstance(m, UnimodularMatrix):
            m = UnimodularMatrix(m if isinstance(m, IntMatrix) else IntMatrix(m))
        if m.m.rows != 3:
            raise ValueError("gluing matrices are 3x3")
        self.m = m

    @property
    def matrix(self) -> IntMatrix:
        return self.m.m

    @property
    def det(self) -> int:
        return self.m.det

    @property
    def g(self) -> int:
        return self.matrix[0, 2]

    @property
    def h(self) -> int:
        return self.matrix[1, 2]

    @property
    def k(self) -> int:
        return self.matrix[2, 2]

    def __eq__(self, other) -> bool:
        if not isinstance(other, GluingMatrix):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash((GluingMatrix, self.matrix))

    def __repr__(self) -> str:
        return f"GluingMatrix({self.matrix.to_lists()!r})"


class LogTransformParams:
    """Direction (a, b), signed meridian coefficient p, and a completion.

    The completion is a determinant +1 matrix whose third column is
    (a, b, p); it records how the surgery torus is parametrized.  Its
    existence forces gcd(a, b, p) = 1.  The multiplicity of the surgery
    is |p|.
    """

    __slots__ = ("a", "b", "p", "completion")

    def __init__(self, a: int, b: int, p: int, completion=None):
        if completion is None:
            completion = complete_primitive_to_sl3((a, b, p))
        elif not isinstance(completion, UnimodularMatrix):
            completion = UnimodularMatrix(completion)
        if completion.det != 1:
            raise OrientationError("completion must have determinant +1")
        if completion.m.col(2) != (a, b, p):
            raise ValueError(
                f"completion third column {completion.m.col(2)} != {(a, b, p)}"
            )
        self.a, self.b, self.p = a, b, p
        self.completion = completion

    @property
    def direction(self) -> tuple:
        return (self.a, self.b)

    @property
    def multiplicity(self) -> int:
        return abs(self.p)

    def __repr__(self) -> str:
        return f"LogTransformParams({self.a}, {self.b}, {self.p})"


@dataclass(frozen=True)
class NormalForm:
    """The reduced gluing shape [[a, c, 1], [b, d, 0], [0, 0, 1]].

    Only the determinant-1 block [[a, c], [b, d]] varies; it is the framing
    data left over after the reduction.
    """

    block: IntMatrix

    def __post_init__(self):
        b = self.block
        if not isinstance(b, IntMatrix):
            b = IntMatrix(b)
            object.__setattr__(self, "block", b)
        if (b.rows, b.cols) != (2, 2):
            raise ValueError("block must be 2x2")
        if b[0, 0] * b[1, 1] - b[0, 1] * b[1, 0] != 1:
            raise ValueError("block must have determinant 1")

    @property
    def matrix(self) -> IntMatrix:
        b = self.block
        return IntMatrix(
            [[b[0, 0], b[0, 1], 1], [b[1, 0], b[1, 1], 0], [0, 0, 1]]
        )


@dataclass(frozen=True)
class ReductionCertificate:
    """A factorization witnessing that two gluings give the same manifold.

    ``left_factors`` multiply on the left with the first element outermost,
    ``right_factors`` multiply on the right with the first element
    innermost:

        left[0] @ ... @ left[-1] @ input @ right[0] @ ... @ right[-1] == output

    Every factor must extend over T^2 x D^2 (see is_extendable), so input
    and output describe diffeomorphic glued manifolds.  The certificate is
    plain data and can be re-checked without trusting its producer.
    """

    input: IntMatrix
    left_factors: tuple = field(default=())
    right_factors: tuple = field(default=())
    output: IntMatrix = None

    def __post_init__(self):
        object.__setattr__(self, "left_factors", tuple(self.left_factors))
        object.__setattr__(self, "right_factors", tuple(self.right_factors))


def _as_matrix(m) -> IntMatrix:
    if isinstance(m, GluingMatrix):
        return m.matrix
    if isinstance(m, UnimodularMatrix):
        return m.m
    if isinstance(m, IntMatrix):
        return m
    return IntMatrix(m)


def zeta_matrix() -> GluingMatrix:
    """The gluing of the two solid-torus-times-torus halves of S^1 x S^3.

    In the (alpha, beta, gamma) basis the boundary identification sends
    alpha to alpha, beta to beta, and the meridian gamma to alpha * gamma^-1,
    giving [[1, 0, 1], [0, 1, 0], [0, 0, -1]] (determinant -1: the map
    reverses the boundary orientation).
    """
    return GluingMatrix(IntMatrix([[1, 0, 1], [0, 1, 0], [0, 0, -1]]))


def standard_gluing_matrix() -> GluingMatrix:
    """The normal form with identity block: the reduction target N0."""
    return GluingMatrix(IntMatrix([[1, 0, 1], [0, 1, 0], [0, 0, 1]]))


def is_extendable(m) -> bool:
    """Whether the boundary map extends over T^2 x D^2.

    True iff the third column is exactly (0, 0, 1) and the determinant is
    +1; the entries below the 2x2 torus block are unconstrained.
    """
    mat = _as_matrix(m)
    if (mat.rows, mat.cols) != (3, 3):
        return False
    if mat[0, 2] != 0 or mat[1, 2] != 0 or mat[2, 2] != 1:
        return False
    return determinant(mat) == 1


def normalize_to_sl3(m: GluingMatrix) -> GluingMatrix:
    """Flip the meridian sign of one side if needed to reach det +1.

    Right-multiplying by diag(1, 1, -1) negates the third column, so the
    pair (g, h) changes at most by an overall sign and gcd(g, h) is
    preserved.
    """
    if m.det == 1:
        return m
    return GluingMatrix(m.matrix @ _FLIP)


def pi1_single_gluing(m: GluingMatrix) -> FgAbelianGroup:
    """Fundamental group of the glued manifold: Z + Z/gcd(g, h).

    Both meridians die, so the group is Z^2 modulo the single relation
    (g, h); gcd(0, 0) = 0 contributes an extra free summand instead of
    torsion.
    """
    d = math.gcd(m.g, m.h)
    if d == 0:
        return FgAbelianGroup(2, ())
    if d == 1:
        return FgAbelianGroup(1, ())
    return FgAbelianGroup(1, (d,))


def is_homology_hopf(m: GluingMatrix) -> bool:
    """True iff the glued manifold has the integer homology of S^1 x S^3."""
    return math.gcd(m.g, m.h) == 1


# --- composition of two fiber surgeries --------------------------------


def _compose_with(zeta: IntMatrix, plus: LogTransformParams,
                  minus: LogTransformParams) -> GluingMatrix:
    left = inverse_unimodular(plus.completion).m
    return GluingMatrix(left @ zeta @ minus.completion.m)


_VARIANT_FLAGS = {
    "zeta": (False, False),
    "zeta-left-flip": (True, False),
    "zeta-right-flip": (False, True),
    "zeta-both-flip": (True, True),
}


def _variant_matrix(name: str) -> IntMatrix:
    left, right = _VARIANT_FLAGS[name]
    z = zeta_matrix().matrix
    if left:
        z = _FLIP @ z
    if right:
        z = z @ _FLIP
    return z


def random_completion(v, seed: int) -> UnimodularMatrix:
    """A pseudo-random determinant +1 completion of the primitive triple v.

    Right-multiplies the canonical completion by a random matrix that
    fixes the third basis vector, which leaves the third column intact.
    """
    rng = random.Random(seed)
    base = complete_primitive_to_sl3(tuple(v))
    block = [[1, 0], [0, 1]]
    for _ in range(6):
        s = rng.randint(-3, 3)
        if rng.random() < 0.5:
            block[0] = [block[0][0] + s * block[1][0], block[0][1] + s * block[1][1]]
        else:
            block[1] = [block[1][0] + s * block[0][0], block[1][1] + s * block[0][1]]
    w = IntMatrix(
        [
            [block[0][0], block[0][1], 0],
            [block[1][0], block[1][1], 0],
            [rng.randint(-5, 5), rng.randint(-5, 5), 1],
        ]
    )
    return UnimodularMatrix(base.m @ w)


def _random_primitive_triple(rng, bound: int) -> tuple:
    while True:
        t = (
            rng.randint(-bound, bound),
            rng.randint(-bound, bound),
            rng.randint(-bound, bound),
        )
        if math.gcd(math.gcd(t[0], t[1]), t[2]) == 1:
            return t


def _agreement_cases():
    # Fixed cases that discriminate between the sign variants, then a
    # deterministic random batch.
    cases = [((1, 0, 1), (1, 0, 1)), ((0, 0, 1), (0, 0, 1)), ((1, 0, 0), (1, 0, 0))]
    rng = random.Random(0xA1B2)
    while len(cases) < 40:
        cases.append(
            (_random_primitive_triple(rng, 9), _random_primitive_triple(rng, 9))
        )
    return cases


def _variant_agrees(name: str) -> bool:
    z = _variant_matrix(name)
    for idx, (tp, tm) in enumerate(_agreement_cases()):
        direct = pi1_two_log_transforms(*tp, *tm)
        for c in range(2):
            plus = LogTransformParams(*tp, completion=random_completion(tp, 7 * idx + c))
            minus = LogTransformParams(*tm, completion=random_completion(tm, 11 * idx + c))
            composed = _compose_with(z, plus, minus)
            if not is_isomorphic(direct, pi1_single_gluing(composed)):
                return False
    return True


@lru_cache(maxsize=1)
def calibrated_zeta_variant() -> str:
    """Pick the meridian sign convention on which the two fundamental-group
    routes agree.

    The basis of the boundary 3-torus is only canonical up to the sign of
    the meridian on each side, which leaves four candidate gluing matrices
    D @ zeta @ D' with D, D' in {I, diag(1, 1, -1)}.  Exactly one makes the
    composed-matrix computation match the direct two-relation presentation;
    this selects it once and caches the answer.
    """
    for name in _VARIANT_FLAGS:
        if _variant_agrees(name):
            return name
    raise RuntimeError("no meridian sign convention passes the agreement suite")


def compose_two_fiber(plus: LogTransformParams,
                      minus: LogTransformParams) -> GluingMatrix:
    """Gluing matrix obtained by surgering two fibers of S^1 x S^3.

    Computes inverse(plus.completion) @ zeta @ minus.completion with the
    calibrated zeta variant.  The invariants of the result depend only on
    the two triples, not on the completion choices.
    """
    return _compose_with(_variant_matrix(calibrated_zeta_variant()), plus, minus)


def pi1_two_log_transforms(a: int, b: int, p: int,
                           c: int, d: int, q: int) -> FgAbelianGroup:
    """Fundamental group from the two surgery relations directly.

    The two killed curves give the relation rows (a + p, b, -p) and
    (c, d, q) over the three torus generators; the group is the cokernel,
    always of the shape Z + Z/mu with mu the gcd of the 2-minors.
    """
    if math.gcd(math.gcd(a, b), p) != 1:
        raise NotPrimitiveError(f"triple {(a, b, p)} is not primitive")
    if math.gcd(math.gcd(c, d), q) != 1:
        raise NotPrimitiveError(f"triple {(c, d, q)} is not primitive")
    pres = Presentation(3, ((a + p, b, -p), (c, d, q)))
    return group_from_presentation(pres)


# --- constructive reduction with certificates ---------------------------


def _embed_sl2_upper_left(u2: UnimodularMatrix) -> IntMatrix:
    b = u2.m
    return IntMatrix(
        [[b[0, 0], b[0, 1], 0], [b[1, 0], b[1, 1], 0], [0, 0, 1]]
    )


_I3 = IntMatrix.identity(3)


def reduce_to_normal_form(m: GluingMatrix):
    """Reduce a det +1 gluing with coprime (g, h) to normal form.

    Returns ``(NormalForm, ReductionCertificate)``.  Three moves, in order,
    each by an extendable factor:

    1. a 2x2 determinant-1 block acting on the first two rows carries the
       column pair (g, h) to (1, 0);
    2. a left shear subtracts (k - 1) times the first row from the last,
       making the meridian coefficient 1;
    3. a right shear adds multiples of the third column to the first two,
       clearing the bottom-left entries.

    Identity moves are omitted, so inputs already in normal form get an
    empty certificate.
    """
    if m.det != 1:
        raise OrientationError(
            "determinant is -1; apply normalize_to_sl3 before reducing"
        )
    if math.gcd(m.g, m.h) != 1:
        raise NotHomologyHopfError(
            f"gcd(g, h) = gcd({m.g}, {m.h}) = {math.gcd(m.g, m.h)} != 1: "
            "not a homology Hopf gluing"
        )
    current = m.matrix
    left = []  # innermost first while building
    carry = _embed_sl2_upper_left(sl2_carry_to_e1(m.g, m.h))
    if carry != _I3:
        current = carry @ current
        left.append(carry)

    k = current[2, 2]
    if k != 1:
        shear = IntMatrix([[1, 0, 0], [0, 1, 0], [-(k - 1), 0, 1]])
        current = shear @ current
        left.append(shear)

    right = []
    e, f = current[2, 0], current[2, 1]
    if e != 0 or f != 0:
        shear = IntMatrix([[1, 0, 0], [0, 1, 0], [-e, -f, 1]])
        current = current @ shear
        right.append(shear)

    if (
        current.col(2) != (1, 0, 1)
        or current[2, 0] != 0
        or current[2, 1] != 0
    ):
        raise ReductionError(f"reduction missed the normal form: {current!r}")

    cert = ReductionCertificate(
        input=m.matrix,
        left_factors=tuple(reversed(left)),
        right_factors=tuple(right),
        output=current,
    )
    block = IntMatrix(
        [[current[0, 0], current[0, 1]], [current[1, 0], current[1, 1]]]
    )
    return NormalForm(block), cert


def reduce_to_standard(m: GluingMatrix) -> ReductionCertificate:
    """Reduce all the way to the fixed target N0 = [[1,0,1],[0,1,0],[0,0,1]].

    Extends the normal-form certificate by one extendable right factor,
    the upper-left embedding of the block inverse.  Fails loudly if the
    product does not come out exactly N0 or the certificate does not
    verify.
    """
    nf, cert = reduce_to_normal_form(m)
    b = nf.block
    undo = IntMatrix(
        [[b[1, 1], -b[0, 1], 0], [-b[1, 0], b[0, 0], 0], [0, 0, 1]]
    )
    output = cert.output
    right = cert.right_factors
    if undo != _I3:
        output = output @ undo
        right = right + (undo,)
    result = ReductionCertificate(
        input=cert.input,
        left_factors=cert.left_factors,
        right_factors=right,
        output=output,
    )
    if output != standard_gluing_matrix().matrix:
        raise ReductionError(f"expected the standard gluing, got {output!r}")
    if not verify_certificate(result):
        raise ReductionError("certificate failed verification")
    return result


def certificate_failure(cert: ReductionCertificate):
    """Reason the certificate is invalid, or None if it verifies.

    Checks every factor against the extendability predicate (reporting the
    first offender by side and index) and then the exact product identity.
    """
    try:
        for side, factors in (("left", cert.left_factors),
                              ("right", cert.right_factors)):
            for idx, f in enumerate(factors):
                mat = _as_matrix(f)
                if (mat.rows, mat.cols) != (3, 3):
                    return f"{side} factor {idx} is not 3x3"
                if not is_extendable(mat):
                    return f"{side} factor {idx} is not extendable"
        product = _as_matrix(cert.input)
        if (product.rows, product.cols) != (3, 3):
            return "input is not 3x3"
        for f in reversed(cert.left_factors):
            product = _as_matrix(f) @ product
        for f in cert.right_factors:
            product = product @ _as_matrix(f)
        if product != _as_matrix(cert.output):
            return "product identity fails"
    except (ValueError, TypeError) as exc:
        return f"malformed certificate: {exc}"
    return None


def verify_certificate(cert: ReductionCertificate) -> bool:
    """True iff every factor is extendable and the product identity holds.

    Never raises on bad certificates; they simply fail.
    """
    return certificate_failure(cert) is None


def framing_block(n: NormalForm) -> IntMatrix:
    """The 2x2 determinant-1 block of a normal form.

    This is the leftover parameter of the reduction; it acts as the
    framing of the final handle attachment and has no effect on the
    diffeomorphism type.
    """
    return n.block
