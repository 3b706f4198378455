"""The sign-reversing involution on non-degenerate rooted synchronized
partitions and the sign-preserving bijection from the degenerate ones onto
zero-free synchronized partitions."""

from __future__ import annotations

from .syncpart import BoundsViolation, RootedSyncPartition, SyncPartition


class DegenerateInput(ValueError):
    pass


class NondegenerateInput(ValueError):
    pass


class ZeroPartInput(ValueError):
    pass


def tau_case(s: RootedSyncPartition) -> str:
    """Which of the four cases ("1a", "1b", "2a", "2b") tau applies to ``s``."""
    if s.degenerate:
        raise DegenerateInput(f"tau is undefined on degenerate {s.to_json()}")
    return ("1" if s.has_zero else "2") + ("a" if s.discrepancy > 0 else "b")


def tau(s: RootedSyncPartition, bounds: tuple[int, int] | None = None) -> RootedSyncPartition:
    if bounds is not None and not s.within(*bounds):
        raise BoundsViolation(f"{s.to_json()} is not in R_{bounds}")
    case = tau_case(s)
    alpha, beta = s.alpha, s.beta
    if case == "1a":
        # the freed column becomes the leftmost bottom star
        return RootedSyncPartition(SyncPartition(alpha, beta[:-1]), s.bar + 1)
    if case == "1b":
        return RootedSyncPartition(SyncPartition(alpha, beta[:-1]), s.bar)
    if case == "2a":
        return RootedSyncPartition(SyncPartition(alpha, beta + (0,)), s.bar - 1)
    return RootedSyncPartition(SyncPartition(alpha, beta + (0,)), s.bar)


def phi(s: RootedSyncPartition) -> SyncPartition:
    if not s.degenerate:
        raise NondegenerateInput(f"phi is undefined on non-degenerate {s.to_json()}")
    if s.discrepancy > 0:
        return s.base
    return SyncPartition(s.alpha, s.beta[:-1])


def phi_inverse(s: SyncPartition) -> RootedSyncPartition:
    if s.has_zero:
        raise ZeroPartInput(f"phi_inverse needs a zero-free input, got {s.to_json()}")
    if s.discrepancy > 0:
        return RootedSyncPartition(s, 1)
    extended = SyncPartition(s.alpha, s.beta + (0,))
    return RootedSyncPartition(extended, -extended.discrepancy)


def trace(s: RootedSyncPartition, bounds: tuple[int, int] | None = None) -> list[dict]:
    """Apply tau (twice) or phi then phi_inverse, recording each step."""
    steps = []
    if s.degenerate:
        out = phi(s)
        steps.append(_step("phi", s, out))
        back = phi_inverse(out)
        steps.append(_step("phi_inverse", out, back))
    else:
        case = tau_case(s)
        out = tau(s, bounds)
        steps.append(_step(case, s, out))
        case2 = tau_case(out)
        back = tau(out, bounds)
        steps.append(_step(case2, out, back))
    return steps


def _step(case, before, after) -> dict:
    return {"case": case, "before": before.to_json(), "after": after.to_json(),
            "sign_before": before.sign, "sign_after": after.sign}
