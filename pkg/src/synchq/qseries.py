"""Named q-series: Pochhammer products, Gaussian binomials, and both sides of
the finite Jacobi, square, and MacMahon identities."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from .qpoly import ONE, ZERO, QPoly, ZINV, ZQLaurent


class IdentityViolation(AssertionError):
    """Two sides of an identity that must agree did not."""


class Side(str, Enum):
    LHS = "LHS"
    RHS = "RHS"


@dataclass(frozen=True)
class IdentitySide:
    label: Side
    m: int
    n: int
    poly: QPoly


def tri(k: int) -> int:
    """k(k+1)/2, valid for negative k as well."""
    return k * (k + 1) // 2


@lru_cache(maxsize=None)
def pochhammer(sign: int, start: int, count: int) -> QPoly:
    """(sign*q^start; q)_count = prod_{i<count} (1 - sign*q^(start+i))."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if count < 0:
        raise ValueError("count must be nonnegative")
    result = ONE
    for i in range(count):
        result = result * (ONE - QPoly.monomial(start + i, sign))
    return result


@lru_cache(maxsize=None)
def _gauss(n: int, k: int) -> QPoly:
    if k == 0 or k == n:
        return ONE
    # [n, k] = [n-1, k-1] + q^k [n-1, k]
    return _gauss(n - 1, k - 1) + _gauss(n - 1, k).shift(k)


def gauss_binomial(n: int, k: int) -> QPoly:
    """Gaussian binomial [n choose k]; zero when k is outside 0..n."""
    if n < 0 or k < 0 or k > n:
        return ZERO
    return _gauss(n, k)


def _require_nonneg(**kw):
    for name, v in kw.items():
        if v < 0:
            raise ValueError(f"{name} must be nonnegative, got {v}")


def finite_jacobi_lhs(m: int, n: int) -> QPoly:
    _require_nonneg(m=m, n=n)
    return pochhammer(1, 1, m) * pochhammer(1, 1, n)


def finite_jacobi_rhs(m: int, n: int) -> QPoly:
    """Sum over k = -(n+1)..m of (-1)^k k q^{k(k+1)/2} [m+n+1, n+k+1]."""
    _require_nonneg(m=m, n=n)
    total = ZERO
    for k in range(-(n + 1), m + 1):
        coeff = k if k % 2 == 0 else -k
        term = gauss_binomial(m + n + 1, n + k + 1)
        total = total + term.shift(tri(k)).scale(coeff)
    return total


def square_jacobi_rhs(n: int) -> QPoly:
    _require_nonneg(n=n)
    total = ZERO
    for k in range(n + 1):
        coeff = (2 * k + 1) * (-1) ** k
        total = total + gauss_binomial(2 * n + 1, n + k + 1).shift(tri(k)).scale(coeff)
    return total


def _zq_factor(z_exp: int, q_exp: int) -> ZQLaurent:
    """1 - z^z_exp q^q_exp."""
    return ZQLaurent({0: ONE}) - ZQLaurent({z_exp: QPoly.monomial(q_exp)})


def macmahon_lhs(m: int, n: int) -> ZQLaurent:
    """(zq; q)_m (1/z; q)_n."""
    _require_nonneg(m=m, n=n)
    result = ZQLaurent({0: ONE})
    for i in range(1, m + 1):
        result = result * _zq_factor(1, i)
    for j in range(n):
        result = result * _zq_factor(-1, j)
    return result


def macmahon_rhs(m: int, n: int) -> ZQLaurent:
    _require_nonneg(m=m, n=n)
    out = {}
    for k in range(-n, m + 1):
        out[k] = gauss_binomial(m + n, n + k).shift(tri(k)).scale((-1) ** k)
    return ZQLaurent(out)


def shifted_f(m: int, n: int) -> ZQLaurent:
    """f(z) = (zq; q)_m (q/z; q)_n."""
    result = ZQLaurent({0: ONE})
    for i in range(1, m + 1):
        result = result * _zq_factor(1, i)
    for j in range(1, n + 1):
        result = result * _zq_factor(-1, j)
    return result


@dataclass
class ProofStep:
    name: str
    description: str
    passed: bool
    witness: dict | None = None

    def to_json(self) -> dict:
        return {"step": self.name, "description": self.description,
                "passed": self.passed, "witness": self.witness}


@dataclass
class ProofReplay:
    m: int
    n: int
    steps: list[ProofStep] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.steps)

    def check(self) -> "ProofReplay":
        """Raise IdentityViolation naming the first failed step."""
        for s in self.steps:
            if not s.passed:
                raise IdentityViolation(
                    f"proof replay (m={self.m}, n={self.n}) failed at step {s.name}: {s.description}"
                )
        return self


def first_difference(a, b) -> dict | None:
    """Locate the lowest exponent where two QPoly or ZQLaurent values differ."""
    if isinstance(a, ZQLaurent):
        for k in sorted(set(a.terms) | set(b.terms)):
            d = first_difference(a.coeff(k), b.coeff(k))
            if d is not None:
                return {"z_exponent": k, **d}
        return None
    for e in sorted(set(a.terms) | set(b.terms)):
        if a.coeff(e) != b.coeff(e):
            return {"exponent": e, "lhs": str(a.coeff(e)), "rhs": str(b.coeff(e))}
    return None


def theorem1_proof_replay(m: int, n: int) -> ProofReplay:
    """Re-run the differentiation argument deriving the finite Jacobi identity
    from MacMahon's form, checking each intermediate equality exactly."""
    _require_nonneg(m=m, n=n)
    replay = ProofReplay(m, n)

    def add(name, desc, lhs, rhs):
        w = first_difference(lhs, rhs)
        replay.steps.append(ProofStep(name, desc, w is None, w))

    lhs7 = macmahon_lhs(m, n + 1)
    rhs7 = macmahon_rhs(m, n + 1)
    add("1", "MacMahon form with n -> n+1", lhs7, rhs7)

    f = shifted_f(m, n)
    one_minus_zinv = ZQLaurent({0: ONE}) - ZINV
    factored = one_minus_zinv * f
    add("2", "(zq;q)_m (1/z;q)_{n+1} = (1 - 1/z) f(z)", lhs7, factored)

    # product rule: d/dz[(1 - 1/z) f] = z^-2 f + (1 - 1/z) f'
    product_rule = ZQLaurent({-2: ONE}) * f + one_minus_zinv * f.derivative()
    d_rhs = rhs7.derivative()
    ok3 = first_difference(factored.derivative(), product_rule)
    w3 = ok3 if ok3 is not None else first_difference(product_rule, d_rhs)
    replay.steps.append(ProofStep("3", "d/dz of both sides agree", w3 is None, w3))

    at1_lhs = product_rule.eval_z1()
    at1_rhs = d_rhs.eval_z1()
    w4 = first_difference(at1_lhs, finite_jacobi_lhs(m, n))
    if w4 is None:
        w4 = first_difference(at1_rhs, finite_jacobi_rhs(m, n))
    replay.steps.append(ProofStep(
        "4", "z = 1 gives (q;q)_m (q;q)_n = finite Jacobi sum", w4 is None, w4))
    return replay


def jacobi_truncated_series(n_trunc: int) -> QPoly:
    """sum_k (-1)^k (2k+1) q^{k(k+1)/2} over k(k+1)/2 <= n_trunc."""
    _require_nonneg(N=n_trunc)
    out = {}
    k = 0
    while tri(k) <= n_trunc:
        out[tri(k)] = (-1) ** k * (2 * k + 1)
        k += 1
    return QPoly(out)
