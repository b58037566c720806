"""Multiplicative structure on the model: products, roots, inverses, bands.

The finite pointwise model is a Phi-algebra (an f-algebra with identity):
multiplication is coordinatewise, the identity is the constant-1 element,
every positive element has a unique positive nth root, and every band is a
support band.  Band projections are therefore represented extensionally by
their support sets, which keeps the projection algebra exact even when
scalar values are floats.

The module also carries the projection-family construction used in the
proof of the nth-root test (the pairwise disjoint Q_m built from threshold
projections of the tail-supremum sequence) and a randomized checker for the
six Phi-algebra axioms.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence, Union

from .errors import EmptySet, ModelMismatch, NegativeInput, NotDecreasing, NotInvertible
from .lattice import (
    SUPPORT_FRAGILE,
    ComplexElement,
    IndexSet,
    Number,
    RealElement,
    _check_same_model,
    abs_real,
    as_complex,
    cmodulus,
    const,
    elements_close,
    inf2,
    inf_of,
    is_exact,
    is_positive,
    is_weak_order_unit,
    leq,
    number_is_zero,
    number_lt,
    pos_part,
    sup2,
    sup_of,
    zero,
)
from .tolerance import active_tolerance

Element = Union[RealElement, ComplexElement]


def identity(model: IndexSet) -> RealElement:
    """The multiplicative identity e: constant 1."""
    return const(model, Fraction(1))


def mul(a: Element, b: Element) -> Element:
    """Coordinatewise product; complex inputs multiply as f+ig elements."""
    if isinstance(a, RealElement) and isinstance(b, RealElement):
        return a * b
    return as_complex(a) * as_complex(b)


# ---------------------------------------------------------------------------
# roots and inverses


def integer_nth_root(x: int, n: int) -> int:
    """floor(x**(1/n)) for x >= 0 by integer Newton iteration."""
    if x < 0:
        raise ValueError("negative radicand")
    if n < 1:
        raise ValueError("root order must be >= 1")
    if n == 1 or x in (0, 1):
        return x
    r = 1 << -(-x.bit_length() // n)
    while True:
        nxt = ((n - 1) * r + x // r ** (n - 1)) // n
        if nxt >= r:
            break
        r = nxt
    while r ** n > x:
        r -= 1
    while (r + 1) ** n <= x:
        r += 1
    return r


def exact_nth_root(x: Fraction, n: int) -> Fraction | None:
    """The exact rational nth root of x >= 0, or None if irrational."""
    if x < 0:
        return None
    rn = integer_nth_root(x.numerator, n)
    rd = integer_nth_root(x.denominator, n)
    if rn**n == x.numerator and rd**n == x.denominator:
        return Fraction(rn, rd)
    return None


def number_nth_root(x: Number, n: int) -> Number:
    if is_exact(x):
        r = exact_nth_root(x, n)
        if r is not None:
            return r
    v = float(x)
    if v < 0:
        # tolerated approximate negatives from upstream float noise
        v = 0.0
    return v ** (1.0 / n)


def nth_root(a: RealElement, n: int) -> RealElement:
    """The unique positive nth root of a >= 0, coordinatewise."""
    if n < 1:
        raise ValueError("root order must be >= 1")
    if not is_positive(a):
        raise NegativeInput("nth_root requires a >= 0")
    return a.map(lambda v: number_nth_root(v, n))


def invert(a: Element) -> Element:
    """Multiplicative inverse; fails listing the vanishing points.

    Succeeds exactly when every coordinate is nonzero (under the active
    tolerance for approximate values); a positive input yields a positive
    inverse.
    """
    if isinstance(a, RealElement):
        bad = tuple(
            p for p, v in zip(a.model.points, a.values) if number_is_zero(v)
        )
        if bad:
            raise NotInvertible(bad)
        return a.map(lambda v: 1 / v if is_exact(v) else 1.0 / v)
    z = as_complex(a)
    bad = tuple(
        p
        for p, re, im in zip(z.model.points, z.re.values, z.im.values)
        if number_is_zero(re) and number_is_zero(im)
    )
    if bad:
        raise NotInvertible(bad)
    denom = z.re * z.re + z.im * z.im
    inv_d = invert(denom)
    return ComplexElement(z.re * inv_d, -(z.im * inv_d))


def pseudo_inverse(a: RealElement) -> RealElement:
    """a*: the inverse of a within its principal band, zero outside.

    Total on a >= 0; satisfies a * a^* = P_a(e).
    """
    if not is_positive(a):
        raise NegativeInput("pseudo_inverse requires a >= 0")
    return a.map(lambda v: Fraction(0) if number_is_zero(v) else (1 / v if is_exact(v) else 1.0 / v))


# ---------------------------------------------------------------------------
# bands


@dataclass(frozen=True)
class BandProjection:
    """Order projection onto a support band, stored as a coordinate mask."""

    model: IndexSet
    support: frozenset[str]
    fragile: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "support", frozenset(self.support))
        object.__setattr__(self, "fragile", frozenset(self.fragile))
        unknown = self.support - set(self.model.points)
        if unknown:
            raise ValueError(f"support labels not in model: {sorted(unknown)}")

    @property
    def support_labels(self) -> tuple[str, ...]:
        """Support in canonical coordinate order."""
        return tuple(p for p in self.model.points if p in self.support)

    def apply(self, x: Element) -> Element:
        if isinstance(x, ComplexElement):
            return ComplexElement(self.apply(x.re), self.apply(x.im))
        _check_same_model(self, x)
        vals = tuple(
            v if p in self.support else Fraction(0)
            for p, v in zip(self.model.points, x.values)
        )
        flags = x.flags | ({SUPPORT_FRAGILE} if self.fragile else frozenset())
        return RealElement(self.model, vals, flags)

    def complement(self) -> "BandProjection":
        return BandProjection(self.model, frozenset(self.model.points) - self.support, self.fragile)

    def is_disjoint_from(self, other: "BandProjection") -> bool:
        return not (self.support & other.support)


def _coordinate_vanishes(v: Number) -> bool:
    return number_is_zero(v)


def _coordinate_fragile(v: Number) -> bool:
    # only float values can sit near the support threshold
    if is_exact(v):
        return False
    eps = active_tolerance().eps_cmp
    mag = abs(float(v))
    scale = max(1.0, mag)
    return eps * scale / 10.0 < mag <= eps * scale * 10.0


def band_projection(a: Element) -> BandProjection:
    """Projection onto the principal band of a: the support {t : a(t) != 0}.

    Approximate coordinates within a decade of the detection threshold are
    recorded as fragile and propagate a support-fragile flag.
    """
    if isinstance(a, ComplexElement):
        support, fragile = set(), set()
        for p, re, im in zip(a.model.points, a.re.values, a.im.values):
            if not (_coordinate_vanishes(re) and _coordinate_vanishes(im)):
                support.add(p)
            if _coordinate_fragile(re) or _coordinate_fragile(im):
                fragile.add(p)
        return BandProjection(a.model, frozenset(support), frozenset(fragile))
    support = {p for p, v in zip(a.model.points, a.values) if not _coordinate_vanishes(v)}
    fragile = {p for p, v in zip(a.model.points, a.values) if _coordinate_fragile(v)}
    return BandProjection(a.model, frozenset(support), frozenset(fragile))


def disjoint_complement(p: BandProjection) -> BandProjection:
    return p.complement()


def threshold_projection_family(
    b: Sequence[RealElement], m_max: int | None = None
) -> list[tuple[BandProjection, BandProjection]]:
    """The (P_{b_m<e}, Q_m) family from the nth-root-test proof machinery.

    ``b`` lists b_1, b_2, ... (the tail suprema); b_0 := e is implicit.
    P_{b_m<e} has support {t : b_m(t) < 1} and Q_m = P_{b_m<e} - P_{b_{m-1}<e}
    as a support difference.  The Q_m are pairwise disjoint and telescope to
    the P supports.
    """
    if m_max is None:
        m_max = len(b)
    if m_max > len(b):
        raise ValueError("m_max exceeds the provided sequence")
    bs = list(b[:m_max])
    for m in range(1, len(bs)):
        if not leq(bs[m], bs[m - 1]):
            raise NotDecreasing(f"b_{m + 1} exceeds b_{m}")
    out: list[tuple[BandProjection, BandProjection]] = []
    prev_support: frozenset[str] = frozenset()  # P_{b_0<e} with b_0 = e
    for bm in bs:
        model = bm.model
        support = frozenset(
            p for p, v in zip(model.points, bm.values) if number_lt(v, Fraction(1))
        )
        p_m = BandProjection(model, support)
        q_m = BandProjection(model, support - prev_support)
        out.append((p_m, q_m))
        prev_support = support
    return out


# ---------------------------------------------------------------------------
# the scaling lemma as an executable identity


def _require_positive_family(a: RealElement, B: Sequence[RealElement]) -> None:
    if not B:
        raise EmptySet("scaling identity needs a nonempty family")
    if not is_positive(a):
        raise NegativeInput("scaling factor must be >= 0")
    for x in B:
        _check_same_model(a, x)
        if not is_positive(x):
            raise NegativeInput("family members must be >= 0")


def scale_sup(a: RealElement, B: Sequence[RealElement]) -> tuple[RealElement, RealElement]:
    """Both sides of sup(aB) = a sup B, computed independently."""
    B = list(B)
    _require_positive_family(a, B)
    lhs = sup_of([a * x for x in B])
    rhs = a * sup_of(B)
    return lhs, rhs


def scale_inf(a: RealElement, B: Sequence[RealElement]) -> tuple[RealElement, RealElement]:
    """Both sides of inf(aB) = a inf B, computed independently."""
    B = list(B)
    _require_positive_family(a, B)
    lhs = inf_of([a * x for x in B])
    rhs = a * inf_of(B)
    return lhs, rhs


# ---------------------------------------------------------------------------
# axiom suite


@dataclass(frozen=True)
class AxiomCheck:
    key: str
    description: str
    passed: bool
    witness: str | None = None


@dataclass(frozen=True)
class AxiomReport:
    model: IndexSet
    samples: int
    seed: int
    checks: tuple[AxiomCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[AxiomCheck]:
        return [c for c in self.checks if not c.passed]


def _rand_fraction(rng: random.Random, span: int = 12) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, 8))


def _rand_real(rng: random.Random, model: IndexSet, positive: bool = False) -> RealElement:
    vals = []
    for _ in range(model.size):
        v = _rand_fraction(rng)
        vals.append(abs(v) if positive else v)
    return RealElement(model, tuple(vals))


def _rand_complex(rng: random.Random, model: IndexSet, sparse: bool = False) -> ComplexElement:
    re, im = [], []
    for _ in range(model.size):
        if sparse and rng.random() < 0.4:
            re.append(Fraction(0))
            im.append(Fraction(0))
        else:
            re.append(_rand_fraction(rng))
            im.append(_rand_fraction(rng))
    return ComplexElement(RealElement(model, tuple(re)), RealElement(model, tuple(im)))


def _rand_projection(rng: random.Random, model: IndexSet) -> BandProjection:
    support = frozenset(p for p in model.points if rng.random() < 0.5)
    return BandProjection(model, support)


def _fmt_witness(**parts) -> str:
    def fmt(v):
        if isinstance(v, ComplexElement):
            return f"re={list(map(str, v.re.values))} im={list(map(str, v.im.values))}"
        if isinstance(v, RealElement):
            return str(list(map(str, v.values)))
        return str(v)

    return "; ".join(f"{k}={fmt(v)}" for k, v in parts.items())


def check_phi_axioms(
    model: IndexSet,
    samples: int,
    seed: int,
    mul_fn: Callable[[Element, Element], Element] | None = None,
) -> AxiomReport:
    """Randomized check of the Phi-algebra properties (i)-(vi) on a model.

    ``mul_fn`` overrides the product, which lets a test harness inject a
    deliberately broken multiplication and confirm the corresponding axiom
    fails with a printed witness.  The paper's list labels two items (iv);
    they are keyed iv_inverse_positive and iv_module here.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = random.Random(seed)
    product = mul_fn if mul_fn is not None else mul
    e = identity(model)

    failures: dict[str, str] = {}

    def record(key: str, witness: str) -> None:
        failures.setdefault(key, witness)

    for _ in range(samples):
        a = _rand_complex(rng, model, sparse=True)
        b = _rand_complex(rng, model, sparse=True)

        ab = as_complex(product(a, b))
        ba = as_complex(product(b, a))
        if "i" not in failures and not (
            elements_close(ab.re, ba.re) and elements_close(ab.im, ba.im)
        ):
            record("i", _fmt_witness(a=a, b=b, ab=ab, ba=ba))

        if "ii" not in failures and not elements_close(
            cmodulus(ab), cmodulus(a) * cmodulus(b)
        ):
            record("ii", _fmt_witness(a=a, b=b, mod_ab=cmodulus(ab), mods=cmodulus(a) * cmodulus(b)))

        moduli_disjoint = elements_close(inf2(cmodulus(a), cmodulus(b)), zero(model))
        product_zero = elements_close(cmodulus(ab), zero(model))
        if "iii" not in failures and moduli_disjoint != product_zero:
            record("iii", _fmt_witness(a=a, b=b, disjoint=moduli_disjoint, zero_product=product_zero))

        u = _rand_real(rng, model, positive=True) + e  # strictly positive
        try:
            u_inv = invert(u)
            if "iv_inverse_positive" not in failures and not is_positive(u_inv):
                record("iv_inverse_positive", _fmt_witness(u=u, inv=u_inv))
        except NotInvertible:
            record("iv_inverse_positive", _fmt_witness(u=u, error="unexpected NotInvertible"))

        P = _rand_projection(rng, model)
        pab = as_complex(P.apply(product(a, b)))
        apb = as_complex(product(a, as_complex(P.apply(b))))
        if "iv_module" not in failures and not (
            elements_close(pab.re, apb.re) and elements_close(pab.im, apb.im)
        ):
            record("iv_module", _fmt_witness(a=a, b=b, support=sorted(P.support)))

        papb = as_complex(product(as_complex(P.apply(a)), as_complex(P.apply(b))))
        if "v" not in failures and not (
            elements_close(pab.re, papb.re) and elements_close(pab.im, papb.im)
        ):
            record("v", _fmt_witness(a=a, b=b, support=sorted(P.support)))

        # (vi): order continuous normal Riesz homomorphism.
        f = _rand_real(rng, model)
        g = _rand_real(rng, model)
        lam = _rand_fraction(rng)
        riesz_ok = (
            elements_close(P.apply(sup2(f, g)), sup2(P.apply(f), P.apply(g)))
            and elements_close(P.apply(f + g), P.apply(f) + P.apply(g))
            and elements_close(P.apply(lam * f), lam * P.apply(f))
        )
        # order continuity on a witnessed chain q_n = (1/2)^n h decreasing to 0:
        # P(q_n) must stay dominated by q_n and decrease, so P(q_n) -> 0.
        h = _rand_real(rng, model, positive=True)
        chain_ok = True
        prev = None
        for n in range(0, 20, 4):
            q_n = Fraction(1, 2**n) * h
            pq = P.apply(q_n)
            if not leq(pq, q_n):
                chain_ok = False
                break
            if prev is not None and not leq(pq, prev):
                chain_ok = False
                break
            prev = pq
        if "vi" not in failures and not (riesz_ok and chain_ok):
            record("vi", _fmt_witness(f=f, g=g, h=h, support=sorted(P.support)))

    descriptions = {
        "i": "ab = ba",
        "ii": "|ab| = |a||b|",
        "iii": "|a| ^ |b| = 0 iff ab = 0",
        "iv_inverse_positive": "a > 0 invertible implies a^-1 > 0",
        "iv_module": "P(ab) = a P(b)",
        "v": "P(ab) = P(a) P(b)",
        "vi": "P is an order continuous normal Riesz homomorphism",
    }
    checks = tuple(
        AxiomCheck(key, desc, key not in failures, failures.get(key))
        for key, desc in descriptions.items()
    )
    return AxiomReport(model=model, samples=samples, seed=seed, checks=checks)
