"""Run identity checks and emit JSON-ready reports."""

from __future__ import annotations

import functools
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import qseries as qs
from .involutions import phi, phi_inverse, tau, tau_case
from .qpoly import ArithmeticOverflow, QPoly
from .syncpart import enumerate_R, enumerate_S, gf_of

PASS, FAIL, OVERFLOW = "pass", "fail", "overflow"


@dataclass
class VerificationReport:
    check: str
    params: dict
    status: str
    witness: dict | None = None

    def __post_init__(self):
        if self.status == FAIL and self.witness is None:
            raise ValueError("a failing report must carry a witness")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        return {"check": self.check, "params": self.params,
                "status": self.status, "witness": self.witness}


def _compare(check, params, lhs, rhs, label=None) -> VerificationReport:
    w = qs.first_difference(lhs, rhs)
    if w is None:
        return VerificationReport(check, params, PASS)
    if label:
        w = {"subcheck": label, **w}
    return VerificationReport(check, params, FAIL, w)


def _check(name, params_of):
    """Turn an ArithmeticOverflow inside a check into an overflow report."""
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args):
            try:
                return fn(*args)
            except ArithmeticOverflow as exc:
                return VerificationReport(name, params_of(*args), OVERFLOW, {"error": str(exc)})
        return wrapper
    return deco


_mn = lambda m, n: {"m": m, "n": n}


@_check("finite-jacobi", _mn)
def verify_finite_jacobi(m: int, n: int) -> VerificationReport:
    return _compare("finite-jacobi", _mn(m, n),
                    qs.finite_jacobi_lhs(m, n), qs.finite_jacobi_rhs(m, n))


@_check("square-jacobi", lambda n: {"n": n})
def verify_square_jacobi(n: int) -> VerificationReport:
    return _compare("square-jacobi", {"n": n},
                    qs.pochhammer(1, 1, n) ** 2, qs.square_jacobi_rhs(n))


@_check("macmahon", _mn)
def verify_macmahon(m: int, n: int) -> VerificationReport:
    return _compare("macmahon", _mn(m, n), qs.macmahon_lhs(m, n), qs.macmahon_rhs(m, n))


@_check("proof-replay", _mn)
def verify_proof_replay(m: int, n: int) -> VerificationReport:
    replay = qs.theorem1_proof_replay(m, n)
    if replay.passed:
        return VerificationReport("proof-replay", _mn(m, n), PASS)
    bad = next(s for s in replay.steps if not s.passed)
    return VerificationReport("proof-replay", _mn(m, n), FAIL,
                              {"step": bad.name, "description": bad.description,
                               **(bad.witness or {})})


def rooted_gf_closed_form(m: int, n: int) -> QPoly:
    """Unsigned rooted generating function as the two discrepancy sums."""
    total = QPoly()
    for k in range(0, m + 1):
        total += qs.gauss_binomial(m + n + 1, n + k + 1).shift(qs.tri(k)).scale(k)
    for k in range(1, n + 2):
        total += qs.gauss_binomial(m + n + 1, n - k + 1).shift(qs.tri(k - 1)).scale(k)
    return total


def discrepancy_closed_form(m: int, n: int, k: int) -> QPoly:
    if k >= 0:
        return qs.gauss_binomial(m + n + 1, n + k + 1).shift(qs.tri(k))
    return qs.gauss_binomial(m + n + 1, n + k + 1).shift(qs.tri(-k - 1))


@_check("gf-family", _mn)
def verify_gf_family(m: int, n: int) -> VerificationReport:
    """Brute-force generating functions of S_{m,n} and R_{m,n} against their
    closed forms."""
    params = _mn(m, n)
    sync = list(enumerate_S(m, n))
    zero_free = [s for s in sync if not s.has_zero]
    rooted = list(enumerate_R(m, n))
    by_k: dict[int, list] = {}
    for s in sync:
        by_k.setdefault(s.discrepancy, []).append(s)

    pairs = [
        ("total", gf_of(sync), qs.pochhammer(-1, 1, m) * qs.pochhammer(-1, 0, n + 1)),
        ("zero-free", gf_of(zero_free), qs.pochhammer(-1, 1, m) * qs.pochhammer(-1, 1, n)),
    ]
    for k in range(-(n + 1), m + 1):
        pairs.append((f"discrepancy={k}", gf_of(by_k.get(k, [])),
                      discrepancy_closed_form(m, n, k)))
    pairs += [
        ("rooted", gf_of(rooted), rooted_gf_closed_form(m, n)),
        ("rooted-signed", gf_of(rooted, signed=True), qs.finite_jacobi_rhs(m, n)),
        ("zero-free-signed", gf_of(zero_free, signed=True), qs.finite_jacobi_lhs(m, n)),
    ]
    if set(by_k) - set(range(-(n + 1), m + 1)):
        return VerificationReport("gf-family", params, FAIL,
                                  {"subcheck": "discrepancy-range", "found": sorted(by_k)})
    for label, brute, closed in pairs:
        rep = _compare("gf-family", params, brute, closed, label)
        if not rep.passed:
            return rep
    return VerificationReport("gf-family", params, PASS)


def signed_counts_by_weight(items) -> dict[int, int]:
    c: Counter = Counter()
    for s in items:
        c[s.weight] += s.sign
    return {w: v for w, v in sorted(c.items()) if v}


@_check("involutions", _mn)
def verify_involution_suite(m: int, n: int) -> VerificationReport:
    """Exhaustively check tau and phi over all of R_{m,n}."""
    params = _mn(m, n)

    def fail(prop, s, **extra):
        return VerificationReport("involutions", params, FAIL,
                                  {"property": prop, "partition": s.to_json(), **extra})

    rooted = list(enumerate_R(m, n))
    zero_free = [s for s in enumerate_S(m, n) if not s.has_zero]
    image = set()
    for s in rooted:
        k, bar = s.discrepancy, s.bar
        shape1 = k > 0 and not s.has_zero and bar == 1
        shape2 = k < 0 and s.has_zero and bar == -k
        if s.degenerate != (shape1 or shape2) or (shape1 and shape2):
            return fail("degeneracy-trichotomy", s)
        if s.degenerate:
            t = phi(s)
            if t.has_zero or not t.within(m, n):
                return fail("phi-image-zero-free", s, image=t.to_json())
            if t.sign != s.sign:
                return fail("phi-sign", s)
            if t.weight != s.weight:
                return fail("phi-weight", s)
            if phi_inverse(t) != s:
                return fail("phi-inverse-left", s)
            if t in image:
                return fail("phi-injective", s)
            image.add(t)
            continue
        case = tau_case(s)
        t = tau(s, (m, n))
        if not t.within(m, n):
            return fail("tau-bounds", s)
        if t.degenerate:
            return fail("tau-nondegenerate-closure", s)
        if t.sign != -s.sign:
            return fail("tau-sign-reversal", s)
        if t.weight != s.weight:
            return fail("tau-weight", s)
        back_case = tau_case(t)
        if {case, back_case} not in ({"1a", "2a"}, {"1b", "2b"}):
            return fail("tau-case-pairing", s, cases=[case, back_case])
        if tau(t, (m, n)) != s:
            return fail("tau-involution", s)
    if image != set(zero_free):
        missing = sorted((set(zero_free) - image), key=lambda x: (x.weight, x.alpha, x.beta))
        return VerificationReport("involutions", params, FAIL,
                                  {"property": "phi-surjective",
                                   "partition": missing[0].to_json() if missing else None})
    for t in zero_free:
        if phi(phi_inverse(t)) != t:
            return fail("phi-inverse-right", t)
    lhs, rhs = signed_counts_by_weight(rooted), signed_counts_by_weight(zero_free)
    if lhs != rhs:
        w = min(set(lhs) ^ set(rhs) | {x for x in lhs if lhs.get(x) != rhs.get(x)})
        return VerificationReport("involutions", params, FAIL,
                                  {"property": "signed-counts", "weight": w,
                                   "rooted": lhs.get(w, 0), "zero_free": rhs.get(w, 0)})
    return VerificationReport("involutions", params, PASS)


@_check("stabilization", lambda n: {"N": n})
def verify_stabilization(n_trunc: int) -> VerificationReport:
    params = {"N": n_trunc}
    target = qs.jacobi_truncated_series(n_trunc)
    cube = (qs.pochhammer(1, 1, n_trunc) ** 3).truncate(n_trunc)
    rep = _compare("stabilization", params, cube, target, "cube")
    if not rep.passed:
        return rep
    # [2N+1, N+k+1] -> 1/(q;q)_inf, so the finite sum needs one more (q;q)_N
    # factor before it agrees with the cube below degree N
    finite = qs.pochhammer(1, 1, n_trunc) * qs.finite_jacobi_rhs(n_trunc, n_trunc)
    return _compare("stabilization", params, finite.truncate(n_trunc), target, "finite-rhs")


# name -> (function, number of integer parameters)
CHECKS: dict[str, tuple[Callable[..., VerificationReport], int]] = {
    "finite-jacobi": (verify_finite_jacobi, 2),
    "square-jacobi": (verify_square_jacobi, 1),
    "macmahon": (verify_macmahon, 2),
    "proof-replay": (verify_proof_replay, 2),
    "gf-family": (verify_gf_family, 2),
    "involutions": (verify_involution_suite, 2),
    "stabilization": (verify_stabilization, 1),
}

ENUMERATION_CHECKS = {"gf-family", "involutions"}
SYMBOLIC_LIMIT = 25
ENUMERATION_LIMIT = 6


class UnknownCheck(KeyError):
    pass


def get_check(name: str):
    try:
        return CHECKS[name]
    except KeyError:
        raise UnknownCheck(f"unknown check {name!r}; choose from {', '.join(CHECKS)}") from None


def default_grid_limit(check: str) -> int:
    env = os.environ.get("SYNCHQ_GRID_LIMIT")
    if env:
        return int(env)
    return ENUMERATION_LIMIT if check in ENUMERATION_CHECKS else SYMBOLIC_LIMIT


def run_check(check: str, *args: int) -> VerificationReport:
    fn, arity = get_check(check)
    if len(args) != arity:
        raise TypeError(f"{check} takes {arity} parameter(s), got {len(args)}")
    return fn(*args)


def _run_cell(cell):
    return run_check(*cell)


def grid_cells(check: str, m_max: int, n_max: int) -> list[tuple]:
    """One-parameter checks sweep their single parameter over 0..n_max."""
    _, arity = get_check(check)
    if arity == 1:
        return [(check, n) for n in range(n_max + 1)]
    return [(check, m, n) for m in range(m_max + 1) for n in range(n_max + 1)]


def run_grid(check: str, m_max: int, n_max: int, workers: int = 1) -> Iterator[VerificationReport]:
    """Reports in (m, n) order; with ``workers`` > 1 cells run in a process pool."""
    cells = grid_cells(check, m_max, n_max)
    if workers <= 1:
        for cell in cells:
            yield _run_cell(cell)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(_run_cell, cells)
