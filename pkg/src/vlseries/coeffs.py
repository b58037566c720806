"""Exact closed-form scalar sequences and their tail analysis.

A coefficient sequence is, per coordinate, a finite prefix of explicit
rational values followed by a sum of terms ``n |-> (p(n)/q(n)) * r^n`` with
rational polynomials p, q and a rational ratio r (possibly negative; the
magnitude analysis works with |r| and signs are handled by exact even/odd
subsequence splitting, which stays inside the class).  The class covers
polynomial-times-geometric sequences, the n^k * r^n family (k possibly
negative, via q = n^|k|), and alternating variants, and it is closed under
addition, negation, scalar multiplication, multiplication by x^n, forward
differences and even/odd splits.

Everything decidable is decided exactly in rational arithmetic:

* eventual sign and eventual monotonicity, with explicit indices obtained
  from Cauchy root bounds of auxiliary polynomials;
* order boundedness, limits, limsup/liminf, and exact tail suprema;
* the limsup of nth roots of |c(n)| (always the dominant |r|);
* series classification (absolute / conditional / divergent) and certified
  summation with explicit remainder envelopes (exact closed form for the
  polynomial-times-geometric case, geometric-ratio envelopes for |r| < 1,
  integral-test brackets for the n^k rate-1 case, alternating brackets with
  a convexity refinement for r < 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

_F0 = Fraction(0)
_F1 = Fraction(1)

# float-rounding slack factor applied to float-evaluated certified bounds
_FLOAT_SLACK = 1e-9
_ULP = 2.3e-16


def _fr(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"exact rational required, got {x!r}")


# ---------------------------------------------------------------------------
# polynomials over Q


@dataclass(frozen=True)
class Poly:
    """Polynomial with rational coefficients, low degree first."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cs = tuple(_fr(c) for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    @staticmethod
    def of(*coeffs) -> "Poly":
        return Poly(tuple(Fraction(c) for c in coeffs))

    @staticmethod
    def n_power(k: int) -> "Poly":
        if k < 0:
            raise ValueError("n_power needs k >= 0")
        return Poly((_F0,) * k + (_F1,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _F0

    def __call__(self, n) -> Fraction:
        acc = _F0
        x = _fr(n)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(tuple(c + (b[i] if i < len(b) else _F0) for i, c in enumerate(a)))

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero or other.is_zero:
            return POLY_ZERO
        out = [_F0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(tuple(out))

    def scale(self, c) -> "Poly":
        c = _fr(c)
        if c == 0:
            return POLY_ZERO
        return Poly(tuple(c * a for a in self.coeffs))

    def compose_affine(self, a: int, b: int) -> "Poly":
        """p(a*n + b) as a polynomial in n."""
        x = Poly((Fraction(b), Fraction(a)))
        acc = POLY_ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + Poly((c,))
        return acc

    def shift1(self) -> "Poly":
        return self.compose_affine(1, 1)

    def sign_index(self) -> tuple[int, int]:
        """(sign, N): sign(p(n)) is constant and equal to ``sign`` for n >= N.

        N comes from the Cauchy root bound, so the statement is exact.
        """
        if self.is_zero:
            return 0, 0
        d = self.degree
        lead = self.leading
        sign = 1 if lead > 0 else -1
        if d == 0:
            return sign, 0
        bound = 1 + max(abs(c) / abs(lead) for c in self.coeffs[:-1])
        return sign, int(bound) + 1

    def positivity_index(self) -> int:
        sign, idx = self.sign_index()
        if sign <= 0:
            raise ValueError("polynomial is not eventually positive")
        return idx


POLY_ZERO = Poly(())
POLY_ONE = Poly((_F1,))


def _abs_beyond(p: Poly) -> tuple[Poly, int]:
    """(p~, N) with p~(n) = |p(n)| > 0 for n >= N; p must be nonzero."""
    sign, idx = p.sign_index()
    return (p if sign > 0 else -p), idx


# ---------------------------------------------------------------------------
# terms


@dataclass(frozen=True)
class Term:
    """n |-> (num(n)/den(n)) * ratio^n."""

    num: Poly
    den: Poly
    ratio: Fraction

    def __post_init__(self):
        object.__setattr__(self, "ratio", _fr(self.ratio))
        if self.den.is_zero:
            raise ValueError("zero denominator polynomial")

    def value(self, n: int) -> Fraction:
        return self.num(n) / self.den(n) * self.ratio**n

    def value_float(self, n: int) -> float:
        r = float(self.ratio)
        try:
            power = r**n
        except OverflowError:
            power = math.inf if r > 1 else -math.inf
        return float(self.num(n)) / float(self.den(n)) * power


def _merge_terms(terms: Iterable[Term]) -> tuple[Term, ...]:
    by_ratio: dict[Fraction, Term] = {}
    for t in terms:
        if t.num.is_zero:
            continue
        if t.ratio in by_ratio:
            prev = by_ratio[t.ratio]
            num = prev.num * t.den + t.num * prev.den
            den = prev.den * t.den
            by_ratio[t.ratio] = Term(num, den, t.ratio)
        else:
            by_ratio[t.ratio] = t
    merged = tuple(
        t for t in by_ratio.values() if not t.num.is_zero
    )
    return tuple(sorted(merged, key=lambda t: (abs(t.ratio), t.ratio), reverse=True))


@dataclass(frozen=True)
class LimitResult:
    status: str  # 'converges' | 'oscillates' | 'unbounded'
    value: Fraction | None = None


@dataclass(frozen=True)
class CertifiedSum:
    """A sum value with a certified bound on |true - value|."""

    value: Fraction | float
    bound: float
    method: str

    @property
    def is_exact(self) -> bool:
        return self.bound == 0 and isinstance(self.value, Fraction)


class SeriesDivergesInForm(ArithmeticError):
    """Internal marker: certified summation hit a divergent component."""


# ---------------------------------------------------------------------------
# forms


@dataclass(frozen=True)
class CoeffForm:
    """Finite prefix of explicit values + sum of rational-geometric terms.

    Terms are only evaluated for n >= len(prefix); constructors arrange the
    prefix so every denominator is nonzero from there on.
    """

    prefix: tuple[Fraction, ...]
    terms: tuple[Term, ...]

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(_fr(v) for v in self.prefix))
        terms = _merge_terms(self.terms)
        start = len(self.prefix)
        # ratio-0 terms only contribute at n = 0 (0^0 = 1 convention)
        if any(t.ratio == 0 for t in terms):
            keep = tuple(t for t in terms if t.ratio != 0)
            if start == 0:
                v0 = sum((t.value(0) for t in terms), _F0)
                object.__setattr__(self, "prefix", (v0,))
                start = 1
            terms = keep
        for t in terms:
            _, idx = _abs_beyond(t.den)
            for n in range(start, max(start, idx) + 1):
                if t.den(n) == 0:
                    raise ValueError(
                        f"denominator vanishes at n={n}; extend the prefix"
                    )
        object.__setattr__(self, "terms", terms)

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> "CoeffForm":
        return CoeffForm((), ())

    @staticmethod
    def constant(c) -> "CoeffForm":
        c = _fr(c)
        if c == 0:
            return CoeffForm((), ())
        return CoeffForm((), (Term(Poly((c,)), POLY_ONE, _F1),))

    @staticmethod
    def from_values(values: Sequence) -> "CoeffForm":
        """Explicit prefix, zero afterwards."""
        return CoeffForm(tuple(_fr(v) for v in values), ())

    @staticmethod
    def poly_geometric(coeffs: Sequence, ratio) -> "CoeffForm":
        """n |-> p(n) * ratio^n with p given low degree first."""
        return CoeffForm((), (Term(Poly(tuple(_fr(c) for c in coeffs)), POLY_ONE, _fr(ratio)),))

    @staticmethod
    def power_geometric(k: int, ratio) -> "CoeffForm":
        """n |-> n^k * ratio^n; for k < 0 the n = 0 value is taken to be 0."""
        ratio = _fr(ratio)
        if k >= 0:
            return CoeffForm((), (Term(Poly.n_power(k), POLY_ONE, ratio),))
        return CoeffForm((_F0,), (Term(POLY_ONE, Poly.n_power(-k), ratio),))

    @staticmethod
    def geometric(ratio) -> "CoeffForm":
        return CoeffForm.poly_geometric((1,), ratio)

    # -- evaluation ---------------------------------------------------------

    @property
    def start(self) -> int:
        return len(self.prefix)

    def value(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("sequence index must be >= 0")
        if n < len(self.prefix):
            return self.prefix[n]
        return sum((t.value(n) for t in self.terms), _F0)

    def value_float(self, n: int) -> float:
        if n < len(self.prefix):
            return float(self.prefix[n])
        return math.fsum(t.value_float(n) for t in self.terms)

    @property
    def is_eventually_zero(self) -> bool:
        return not self.terms

    @property
    def has_negative_ratio(self) -> bool:
        return any(t.ratio < 0 for t in self.terms)

    # -- algebra ------------------------------------------------------------

    def __add__(self, other: "CoeffForm") -> "CoeffForm":
        start = max(self.start, other.start)
        prefix = tuple(self.value(n) + other.value(n) for n in range(start))
        return CoeffForm(prefix, self.terms + other.terms)

    def __neg__(self) -> "CoeffForm":
        return CoeffForm(
            tuple(-v for v in self.prefix),
            tuple(Term(-t.num, t.den, t.ratio) for t in self.terms),
        )

    def __sub__(self, other: "CoeffForm") -> "CoeffForm":
        return self + (-other)

    def scale(self, c) -> "CoeffForm":
        c = _fr(c)
        if c == 0:
            return CoeffForm.zero()
        return CoeffForm(
            tuple(c * v for v in self.prefix),
            tuple(Term(t.num.scale(c), t.den, t.ratio) for t in self.terms),
        )

    def times_geometric(self, x) -> "CoeffForm":
        """n |-> c(n) * x^n, staying in the class."""
        x = _fr(x)
        if x == 0:
            return CoeffForm.from_values((self.value(0),))
        return CoeffForm(
            tuple(v * x**n for n, v in enumerate(self.prefix)),
            tuple(Term(t.num, t.den, t.ratio * x) for t in self.terms),
        )

    def minus_const(self, c) -> "CoeffForm":
        return self - CoeffForm.constant(c)

    def shifted(self) -> "CoeffForm":
        """n |-> c(n+1)."""
        new_start = max(self.start - 1, 0)
        prefix = tuple(self.value(n + 1) for n in range(new_start))
        terms = tuple(
            Term(t.num.shift1().scale(t.ratio), t.den.shift1(), t.ratio) for t in self.terms
        )
        return CoeffForm(prefix, terms)

    def even_part(self) -> "CoeffForm":
        """k |-> c(2k)."""
        new_start = (self.start + 1) // 2
        prefix = tuple(self.value(2 * k) for k in range(new_start))
        terms = tuple(
            Term(t.num.compose_affine(2, 0), t.den.compose_affine(2, 0), t.ratio**2)
            for t in self.terms
        )
        return CoeffForm(prefix, terms)

    def odd_part(self) -> "CoeffForm":
        """k |-> c(2k+1)."""
        new_start = self.start // 2
        prefix = tuple(self.value(2 * k + 1) for k in range(new_start))
        terms = tuple(
            Term(
                t.num.compose_affine(2, 1).scale(t.ratio),
                t.den.compose_affine(2, 1),
                t.ratio**2,
            )
            for t in self.terms
        )
        return CoeffForm(prefix, terms)

    # -- boundedness, limits, sign ------------------------------------------

    def boundedness(self) -> tuple[bool, str]:
        for t in self.terms:
            if abs(t.ratio) > 1:
                return False, f"ratio {t.ratio} has magnitude > 1"
            if abs(t.ratio) == 1 and t.num.degree > t.den.degree:
                return False, f"rate-1 term grows like n^{t.num.degree - t.den.degree}"
        return True, ""

    def limit(self) -> LimitResult:
        ok, _ = self.boundedness()
        if not ok:
            return LimitResult("unbounded")
        if not self.has_negative_ratio:
            value = _F0
            for t in self.terms:
                if t.ratio == 1:
                    if t.num.degree == t.den.degree:
                        value += t.num.leading / t.den.leading
                    # deg num < deg den contributes 0
            return LimitResult("converges", value)
        le = self.even_part().limit()
        lo = self.odd_part().limit()
        if le.status == lo.status == "converges" and le.value == lo.value:
            return LimitResult("converges", le.value)
        return LimitResult("oscillates")

    def limsup(self) -> Fraction:
        res = self.limit()
        if res.status == "unbounded":
            raise SeriesDivergesInForm("limsup of an unbounded sequence")
        if res.status == "converges":
            return res.value
        le = self.even_part().limit()
        lo = self.odd_part().limit()
        return max(le.value, lo.value)

    def liminf(self) -> Fraction:
        return -((-self).limsup())

    def eventual_sign(self) -> tuple[int, int]:
        """(sign, N): sign(c(n)) constant for n >= N.  Needs ratios >= 0."""
        if self.has_negative_ratio:
            raise ValueError("eventual_sign is defined for nonnegative ratios only")
        if not self.terms:
            return 0, self.start
        dom = self.terms[0]  # largest ratio after canonical sort
        num_abs, n_num = _abs_beyond(dom.num)
        den_abs, n_den = _abs_beyond(dom.den)
        sign = (1 if dom.num.leading > 0 else -1) * (1 if dom.den.leading > 0 else -1)
        index = max(n_num, n_den, self.start)
        k = len(self.terms)
        for other in self.terms[1:]:
            index = max(index, self._domination_index(dom, other, k - 1))
        return sign, index

    def _domination_index(self, dom: Term, other: Term, factor: int) -> int:
        """Exact N with |dom(n)| > factor * |other(n)| for all n >= N."""
        if other.ratio == 0:
            return max(self.start, 1)
        a_num, na = _abs_beyond(dom.num)
        a_den, nda = _abs_beyond(dom.den)
        b_num, nb = _abs_beyond(other.num)
        b_den, ndb = _abs_beyond(other.den)
        # compare rd^n * A(n) vs factor * rj^n * B(n), A = |num_d| |den_j| etc.
        A = a_num * b_den
        B = (b_num * a_den).scale(factor)
        g = abs(dom.ratio) / abs(other.ratio)
        # h(n) = g*A(n+1)*B(n) - A(n)*B(n+1) > 0 beyond its Cauchy bound makes
        # the ratio of the two sides nondecreasing; scan from there.
        h = (A.shift1().scale(g)) * B - A * (B.shift1())
        if h.is_zero:
            n_h = 0
        else:
            sign_h, n_h = h.sign_index()
            if sign_h <= 0:
                raise AssertionError("domination ratio must eventually increase")
        n0 = max(na, nda, nb, ndb, n_h, self.start, 1)
        rd, rj = abs(dom.ratio), abs(other.ratio)
        n = n0
        pw_d, pw_j = rd**n, rj**n
        while not (pw_d * A(n) > pw_j * B(n)):
            n += 1
            pw_d *= rd
            pw_j *= rj
        return n

    def monotone(self) -> tuple[str, int]:
        """('dec'|'inc'|'const', N): behavior of n |-> c(n) for n >= N.

        Needs ratios >= 0 (callers split by parity first).
        """
        delta = self.shifted() - self
        sign, idx = delta.eventual_sign()
        direction = {1: "inc", -1: "dec", 0: "const"}[sign]
        return direction, max(idx, self.start)

    # -- exact tail suprema ---------------------------------------------------

    def tail_sup(self, m: int) -> Fraction:
        """sup_{n >= m} c(n), exact.  Raises for unbounded-above forms."""
        ok, why = self.boundedness()
        if not ok:
            # bounded above may still hold (e.g. -n); detect via parity parts
            pass
        if self.has_negative_ratio:
            even = self.even_part().tail_sup((m + 1) // 2)
            odd = self.odd_part().tail_sup(m // 2)
            return max(even, odd)
        if not self.terms:
            if m >= self.start:
                return _F0
            return max(list(self.prefix[m:]) + [_F0])
        # unbounded above iff a rate>1 or rate-1-growing component is
        # eventually positive
        dom_sign, _ = self.eventual_sign()
        ok, _ = self.boundedness()
        if not ok and dom_sign > 0:
            raise SeriesDivergesInForm("tail supremum is not finite")
        direction, n_mono = self.monotone()
        top = max(m, n_mono, self.start)
        candidates = [self.value(n) for n in range(m, top + 1)]
        if ok:
            candidates.append(self.limit().value)
        # unbounded-below monotone tails contribute nothing beyond value(top)
        return max(candidates)

    def tail_inf(self, m: int) -> Fraction:
        return -((-self).tail_sup(m))

    def abs_tail_sup(self, m: int) -> Fraction:
        return max(self.tail_sup(m), (-self).tail_sup(m))

    # -- roots ----------------------------------------------------------------

    def root_limsup(self) -> Fraction:
        """limsup |c(n)|^(1/n), exact: the dominant |ratio| (0 if finitely many
        nonzero values)."""
        if not self.terms:
            return _F0
        return max(abs(t.ratio) for t in self.terms)

    # -- series ---------------------------------------------------------------

    def series_class(self) -> str:
        """'absolute' | 'conditional' | 'divergent' for sum_n c(n)."""
        has_cond = False
        for t in self.terms:
            r = abs(t.ratio)
            if r > 1:
                return "divergent"
            gap = t.den.degree - t.num.degree
            if r == 1:
                if t.ratio == 1:
                    if gap < 2:
                        return "divergent"
                else:
                    if gap <= 0:
                        return "divergent"
                    if gap == 1:
                        has_cond = True
        return "conditional" if has_cond else "absolute"

    def head_sum(self, upto: int) -> Fraction:
        """sum_{n=0}^{upto} c(n), exact."""
        return sum((self.value(n) for n in range(upto + 1)), _F0)

    def certified_sum(self, target: float = 1e-10, from_n: int = 0) -> CertifiedSum:
        """sum_{n >= from_n} c(n) with a certified error bound <= ~target.

        Exact (bound 0) when every term is polynomial-times-geometric;
        otherwise float with an explicit envelope.
        """
        if self.series_class() == "divergent":
            raise SeriesDivergesInForm("certified_sum of a divergent series")
        total: Fraction | float = _F0
        bound = 0.0
        methods = []
        for n in range(from_n, self.start):
            total = total + self.value(n)
        n0 = max(from_n, self.start)
        per_target = target / max(1, len(self.terms))
        for t in self.terms:
            s = _term_sum(t, n0, per_target)
            if isinstance(total, Fraction) and isinstance(s.value, Fraction):
                total = total + s.value
            else:
                total = float(total) + float(s.value)
            bound += s.bound
            methods.append(s.method)
        return CertifiedSum(total, bound, "+".join(sorted(set(methods))) or "finite")

    def abs_certified_sum(self, target: float = 1e-10, from_n: int = 0) -> CertifiedSum:
        """sum_{n >= from_n} |c(n)| with a certified error bound."""
        if self.series_class() != "absolute":
            raise SeriesDivergesInForm("absolute sum diverges")
        if self.has_negative_ratio:
            even = self.even_part().abs_certified_sum(target / 2, (from_n + 1) // 2)
            odd = self.odd_part().abs_certified_sum(target / 2, from_n // 2)
            value: Fraction | float
            if isinstance(even.value, Fraction) and isinstance(odd.value, Fraction):
                value = even.value + odd.value
            else:
                value = float(even.value) + float(odd.value)
            return CertifiedSum(value, even.bound + odd.bound, "parity-split")
        sign, n_sign = self.eventual_sign()
        n_sign = max(n_sign, from_n)
        head = sum((abs(self.value(n)) for n in range(from_n, n_sign)), _F0)
        body = self.certified_sum(target, from_n=n_sign)
        signed = body.value if sign >= 0 else -body.value
        if isinstance(signed, Fraction):
            return CertifiedSum(head + signed, body.bound, body.method)
        return CertifiedSum(float(head) + signed, body.bound, body.method)

    def abs_tail_bound(self, m: int) -> float:
        """An upper bound for sum_{n > m} |c(n)|, decreasing in m, -> 0.

        The remainder envelope reported with convergence witnesses.
        """
        if self.series_class() != "absolute":
            raise SeriesDivergesInForm("no absolute remainder envelope")
        if not self.terms:
            if m + 1 >= self.start:
                return 0.0
            return float(sum(abs(v) for v in self.prefix[m + 1 :]))
        total = 0.0
        for t in self.terms:
            total += _term_abs_tail_bound(t, max(m + 1, self.start))
        return total


# ---------------------------------------------------------------------------
# per-term certified summation


def _term_ratio_envelope(t: Term, n0: int) -> tuple[int, Fraction]:
    """(N, rho): |t(n+1)| <= rho |t(n)| for all n >= N, with |r| < rho < 1."""
    r = abs(t.ratio)
    rho = (1 + r) / 2
    num_abs, n_num = _abs_beyond(t.num)
    den_abs, n_den = _abs_beyond(t.den)
    h = (num_abs * den_abs.shift1()).scale(rho) - (num_abs.shift1() * den_abs).scale(r)
    sign_h, n_h = h.sign_index()
    if sign_h <= 0:
        raise AssertionError("geometric envelope polynomial must be eventually positive")
    return max(n_num, n_den, n_h, n0, 1), rho


def _term_sum_geometric(t: Term, n0: int, target: float) -> CertifiedSum:
    if t.den.degree == 0:
        # exact closed form: Newton's forward-difference expansion gives
        # sum_n p(n) r^n = sum_j (D^j p)(0) r^j / (1-r)^(j+1)
        p = t.num.scale(1 / t.den.coeffs[0])
        r = t.ratio
        total = _F0
        diff = p
        j = 0
        while not diff.is_zero:
            total += diff(0) * r**j / (1 - r) ** (j + 1)
            diff = diff.shift1() - diff
            j += 1
        head = sum((t.value(n) for n in range(0, n0)), _F0)
        return CertifiedSum(total - head, 0.0, "closed-form")
    n_env, rho = _term_ratio_envelope(t, n0)
    rho_f = float(rho)
    m = max(n_env, n0)
    while True:
        tail = abs(t.value_float(m + 1)) / (1 - rho_f) * (1 + _FLOAT_SLACK)
        if tail <= target / 2 or tail == 0.0:
            break
        m = max(m + 8, int(m * 1.5))
    acc = 0.0
    absacc = 0.0
    for n in range(n0, m + 1):
        v = t.value_float(n)
        acc += v
        absacc += abs(v)
    rounding = _ULP * absacc * max(1, m - n0 + 1) ** 0.5 + _ULP
    return CertifiedSum(acc, tail + rounding, "geometric-envelope")


def _term_sum_alternating(t: Term, n0: int, target: float) -> CertifiedSum:
    """r < 0, |r| <= 1: alternating sum with certified brackets.

    Writes c(n) = sigma (-1)^n g(n) with g = |num/den| |r|^n eventually
    decreasing; uses the convexity-refined bracket when the convexity of g is
    certified by polynomial positivity, the plain alternating bracket
    otherwise.
    """
    g = Term(t.num, t.den, -t.ratio)  # |c(n)| with the sign pattern removed
    num_abs, n_num = _abs_beyond(t.num)
    den_abs, n_den = _abs_beyond(t.den)
    sigma_num = 1 if t.num.leading > 0 else -1
    sigma_den = 1 if t.den.leading > 0 else -1
    sigma = sigma_num * sigma_den
    g_abs = Term(num_abs, den_abs, -t.ratio)
    s = -t.ratio  # = |r|
    # decreasing index for g, exact
    hd = (num_abs * den_abs.shift1()) - (num_abs.shift1() * den_abs).scale(s)
    sign_d, n_dec = hd.sign_index() if not hd.is_zero else (0, 0)
    if sign_d <= 0 and not hd.is_zero:
        # not eventually decreasing: only possible when the series diverges
        raise SeriesDivergesInForm("alternating terms do not decrease")
    # convexity index for g, exact when certifiable
    d0, d1, d2 = den_abs, den_abs.shift1(), den_abs.shift1().shift1()
    p0, p1, p2 = num_abs, num_abs.shift1(), num_abs.shift1().shift1()
    hc = (p0 * d1 * d2) - (p1 * d0 * d2).scale(2 * s) + (p2 * d0 * d1).scale(s * s)
    convex_from = None
    if not hc.is_zero:
        sign_c, n_cx = hc.sign_index()
        if sign_c > 0:
            convex_from = n_cx
    base = max(n_num, n_den, n_dec, n0, 1)
    if convex_from is not None:
        base = max(base, convex_from)
    m = base
    while True:
        g1 = g_abs.value_float(m + 1)
        g2 = g_abs.value_float(m + 2)
        if convex_from is not None:
            err = (g1 - g2) / 4 + _ULP * max(g1, 1.0)
        else:
            err = g1 / 2
        if err <= target / 2 or g1 == 0.0:
            break
        m = max(m + 8, int(m * 1.3))
    acc = 0.0
    absacc = 0.0
    for n in range(n0, m + 1):
        v = t.value_float(n)
        acc += v
        absacc += abs(v)
    # tail correction: sigma (-1)^(m+1) [g(m+1)/2 (+ Dg(m+1)/4 when convex)]
    parity = 1 if (m + 1) % 2 == 0 else -1
    if convex_from is not None:
        correction = sigma * parity * (g1 / 2 + (g1 - g2) / 4)
        err = (g1 - g2) / 4
    else:
        correction = sigma * parity * g1 / 2
        err = g1 / 2
    rounding = _ULP * absacc * max(1, m - n0 + 1) ** 0.5 + _ULP
    return CertifiedSum(acc + correction, err * (1 + _FLOAT_SLACK) + rounding, "alternating-bracket")


def _term_sum_rate_one(t: Term, n0: int, target: float) -> CertifiedSum:
    """r = 1, deg den - deg num >= 2: positive-term sum with exact brackets."""
    num_abs, n_num = _abs_beyond(t.num)
    den_abs, n_den = _abs_beyond(t.den)
    sigma = (1 if t.num.leading > 0 else -1) * (1 if t.den.leading > 0 else -1)
    # pure power shape 1/n^k: exact integral-test bracket
    if t.num.degree == 0 and all(c == 0 for c in t.den.coeffs[:-1]):
        k = t.den.degree
        c0 = t.num.coeffs[0] / t.den.leading
        m = max(n0, 1)
        while True:
            g1 = abs(float(c0)) / float(m + 1) ** k
            if g1 / 2 <= target / 2:
                break
            m = max(m + 8, int(m * 1.5))
        acc = 0.0
        for n in range(n0, m + 1):
            acc += t.value_float(n)
        # integral bracket: tail in [I, I + g(m+1)] with I = c0 (m+1)^(1-k)/(k-1)
        integral = float(c0) / ((k - 1) * float(m + 1) ** (k - 1))
        acc += integral + math.copysign(g1 / 2, float(c0))
        rounding = _ULP * abs(acc) * max(1, m - n0 + 1) ** 0.5 + _ULP
        return CertifiedSum(acc, g1 / 2 * (1 + _FLOAT_SLACK) + rounding, "integral-bracket")
    # general rational case: compare with C / n^2
    gap = t.den.degree - t.num.degree
    C = abs(t.num.leading / t.den.leading) + 1
    h = den_abs.scale(C) - num_abs * Poly.n_power(2) * Poly.n_power(max(gap - 2, 0))
    # positivity of C*den - n^2*num*(n^(gap-2)) certifies |t(n)| <= C n^-2
    sign_h, n_h = h.sign_index()
    while sign_h <= 0:
        C *= 2
        h = den_abs.scale(C) - num_abs * Poly.n_power(2) * Poly.n_power(max(gap - 2, 0))
        sign_h, n_h = h.sign_index()
    base = max(n_num, n_den, n_h, n0, 1)
    m = base
    cap = 4_000_000
    while float(C) / m > target / 2 and m < cap:
        m = min(max(m + 8, int(m * 1.5)), cap)
    acc = 0.0
    absacc = 0.0
    for n in range(n0, m + 1):
        v = t.value_float(n)
        acc += v
        absacc += abs(v)
    tail = float(C) / m
    acc += math.copysign(tail / 2, sigma)
    rounding = _ULP * absacc * max(1, m - n0 + 1) ** 0.5 + _ULP
    return CertifiedSum(acc, tail / 2 * (1 + _FLOAT_SLACK) + rounding, "comparison-bracket")


def _term_sum(t: Term, n0: int, target: float) -> CertifiedSum:
    r = t.ratio
    if abs(r) > 1:
        raise SeriesDivergesInForm("geometric rate above 1")
    if abs(r) < 1:
        return _term_sum_geometric(t, n0, target)
    if r == 1:
        return _term_sum_rate_one(t, n0, target)
    return _term_sum_alternating(t, n0, target)


def _term_abs_tail_bound(t: Term, n_from: int) -> float:
    """Upper bound for sum_{n >= n_from} |t(n)|, decreasing in n_from."""
    r = abs(t.ratio)
    if r < 1:
        n_env, rho = _term_ratio_envelope(t, 0)
        rho_f = float(rho)
        if n_from >= n_env:
            return abs(t.value_float(n_from)) / (1 - rho_f) * (1 + _FLOAT_SLACK)
        head = sum(abs(t.value_float(n)) for n in range(n_from, n_env))
        return head + abs(t.value_float(n_env)) / (1 - rho_f) * (1 + _FLOAT_SLACK)
    # rate-1 absolutely convergent shapes
    num_abs, n_num = _abs_beyond(t.num)
    den_abs, n_den = _abs_beyond(t.den)
    if t.num.degree == 0 and all(c == 0 for c in t.den.coeffs[:-1]):
        k = t.den.degree
        c0 = abs(float(t.num.coeffs[0] / t.den.leading))
        m = max(n_from, 1)
        # integral test: tail <= g(m) + integral_m^inf
        return c0 / float(m) ** k + c0 / ((k - 1) * float(m) ** (k - 1))
    gap = t.den.degree - t.num.degree
    C = abs(t.num.leading / t.den.leading) + 1
    h = den_abs.scale(C) - num_abs * Poly.n_power(2) * Poly.n_power(max(gap - 2, 0))
    sign_h, n_h = h.sign_index()
    while sign_h <= 0:
        C *= 2
        h = den_abs.scale(C) - num_abs * Poly.n_power(2) * Poly.n_power(max(gap - 2, 0))
        sign_h, n_h = h.sign_index()
    base = max(n_num, n_den, n_h, 1)
    if n_from >= base:
        return float(C) / (n_from - 1) if n_from > 1 else float(C) * 2
    head = sum(abs(t.value_float(n)) for n in range(n_from, base))
    return head + float(C) / max(base - 1, 1)
