"""Whole shifted inverse and fast quotients for polynomials over non-commutative rings.

The whole h-shifted inverse of v is x**h quo v.  For a central variable it is
the same polynomial whether computed as a left or a right quotient, so it can
be refined by a modified Newton-Schulz iteration whose multiplications keep
the classical operand order:

    w  <-  w + shift(w * (x**h - v*w), -h)        (RIGHT orientation)
    w  <-  w + shift((x**h - w*v) * w, -h)        (LEFT orientation)

Three refinement strategies are provided.  ``refine1`` works at full length
throughout; ``refine2`` grows the working value from 2 coefficients, roughly
doubling the accurate prefix each pass; ``refine3`` additionally truncates the
divisor to the prefix that can influence the coefficients being computed.
All three return the exact whole shifted inverse.

Quotients follow from the shifted inverse: with h = deg u,

    u rquo v = shift(u * shinv(v, h+1), -h-1)
    u lquo v = shift(shinv(v, h+1) * u, -h-1)

The ``guard``/``shortfall`` knobs in :class:`ShinvConfig` only engage for
carry-propagating domains; polynomial domains have no carries, so they stay 0.
"""

from dataclasses import dataclass, field

from .polynomial import DensePoly, RIGHT, mul_mod, mul_oriented, shift


@dataclass
class ShinvConfig:
    """Knobs for the shifted-inverse refinement.

    ``extra_guard_steps`` is the number of defensive full-width iterations
    refine1 runs after its doubling loop; ``None`` picks the default of 1 for
    non-commutative coefficient rings and 0 for commutative ones.  Exactness
    never depends on it in carry-free domains, and the division tests enforce
    exactness either way.
    """

    has_carries: bool = False
    guard: int = 0
    shortfall: int = 0
    refine: int = 3
    extra_guard_steps: int | None = None

    def guard_shortfall(self):
        if self.has_carries:
            return self.guard, self.shortfall
        return 0, 0

    def guard_steps_for(self, ring):
        if self.extra_guard_steps is not None:
            return self.extra_guard_steps
        return 0 if ring.is_commutative else 1


@dataclass
class IterationRecord:
    """One refinement pass: claimed accurate places, width of w, and step shape."""

    accurate: int
    prec: int
    grow: int
    divisor_drop: int
    w: DensePoly | None = None


@dataclass
class IterationTrace:
    """Trace of a refinement run; guard steps are counted apart from the loop passes."""

    records: list = field(default_factory=list)
    guard_steps: int = 0

    def record(self, accurate, w, grow, drop):
        self.records.append(IterationRecord(accurate, w.prec, grow, drop, w))

    @property
    def iterations(self):
        return len(self.records)


def shinv0(v):
    """Initial approximation accurate to 2 places:  inv(vk)*x - inv(vk)*v_{k-1}*inv(vk).

    Both inverse factors sit around the middle coefficient, which makes the
    same starting value correct for left and right refinement.
    """
    ring = v.ring
    k = v.degree
    if k is None or k < 1:
        raise ValueError("shinv0 needs a divisor of degree at least 1")
    ivk = ring.inv(v.lc)
    c = ring.neg(ring.mul(ring.mul(ivk, v.coeff(k - 1)), ivk))
    return DensePoly(ring, (c, ivk)), 2


def pow_diff(v, w, h, accurate, orientation=RIGHT):
    """Compute shift(1, h) - v*w (oriented), truncating when the top must cancel.

    When w agrees with the shifted inverse in its top ``accurate`` places, the
    coefficients of v*w from degree L = prec v + prec w - accurate upward are
    exactly those of x**h, so the difference equals -(v*w mod x**L).
    """
    ring = v.ring
    L = v.prec + w.prec - accurate
    if v.is_zero or w.is_zero or L >= h:
        return shift(DensePoly.one(ring), h) - mul_oriented(v, w, orientation)
    return -mul_mod(v, w, L, orientation)


def step(h, v, w, grow, accurate, orientation=RIGHT):
    """One Newton-Schulz update:  shift(w, m) + shift(w * pow_diff(v, w, h-m), 2m-h)."""
    pd = pow_diff(v, w, h - grow, accurate, orientation)
    return shift(w, grow) + shift(mul_oriented(w, pd, orientation), 2 * grow - h)


def refine1(v, h, k, w, accurate, cfg, orientation=RIGHT, trace=None):
    """Refine at full length, doubling the accurate prefix each pass.

    The starting value is scaled to the full width h-k+1 of the result; the
    loop then runs at most ceil(log2(h-k)) passes, followed by the configured
    guard steps (no-ops once w is exact).
    """
    g, d = cfg.guard_shortfall()
    h = h + g
    w = shift(w, h - k + 1 - accurate)
    while h - k + 1 - d > accurate:
        w = step(h, v, w, 0, accurate, orientation)
        accurate = min(2 * accurate - d, h - k + 1 - d)
        if trace is not None:
            trace.record(accurate, w, 0, 0)
    for _ in range(cfg.guard_steps_for(v.ring)):
        w = step(h, v, w, 0, accurate, orientation)
        if trace is not None:
            trace.guard_steps += 1
    return w


def refine2(v, h, k, w, accurate, cfg, orientation=RIGHT, trace=None):
    """Refine a short working value, growing it by m = min(target - l, l) per pass."""
    g, d = cfg.guard_shortfall()
    w = shift(w, g)
    while h - k + 1 - d > accurate:
        grow = min(h - k + 1 - accurate, accurate)
        w = shift(
            step(k + accurate + grow + d - 1 + g, v, w, grow, accurate - g, orientation),
            -d,
        )
        accurate = accurate + grow - d
        if trace is not None:
            trace.record(accurate, w, grow, 0)
    return w


def refine3(v, h, k, w, accurate, cfg, orientation=RIGHT, trace=None):
    """Like refine2, but also drops divisor coefficients that cannot matter.

    A pass that extends the accurate prefix to l+m places only depends on the
    top 2(l+m) coefficients of the divisor, so the rest is shifted away.
    """
    g, d = cfg.guard_shortfall()
    w = shift(w, g)
    while h - k + 1 - d > accurate:
        grow = min(h - k + 1 - accurate, accurate)
        drop = max(0, k - 2 * (accurate + grow) + 1 - g)
        w = shift(
            step(
                k + accurate + grow - drop - 1 + d + g,
                shift(v, -drop),
                w,
                grow,
                accurate - g,
                orientation,
            ),
            -d,
        )
        accurate = accurate + grow - d
        if trace is not None:
            trace.record(accurate, w, grow, drop)
    return shift(w, -g)


_REFINES = {1: refine1, 2: refine2, 3: refine3}


def shinv(v, h, cfg=None, orientation=RIGHT, trace=None):
    """The whole h-shifted inverse x**h quo v (the same on both sides).

    Requires v nonzero with an invertible leading coefficient and h >= 0.
    Degenerate shapes (h < k, constant or monomial divisors, h = k) are
    answered directly; everything else goes through the configured refinement.
    """
    if v.is_zero:
        raise ZeroDivisionError("shifted inverse of the zero polynomial")
    if h < 0:
        raise ValueError("shift amount must be non-negative")
    ring = v.ring
    k = v.degree
    ivk = ring.inv(v.lc)
    if h < k:
        return DensePoly.zero(ring)
    if k == 0 or h == k or v == DensePoly.monomial(ring, v.lc, k):
        return DensePoly.monomial(ring, ivk, h - k)
    if cfg is None:
        cfg = ShinvConfig()
    w, accurate = shinv0(v)
    try:
        refine = _REFINES[cfg.refine]
    except KeyError:
        raise ValueError("unknown refine variant %r" % (cfg.refine,)) from None
    return refine(v, h, k, w, accurate, cfg, orientation, trace)


def quo(u, v, orientation=RIGHT, cfg=None, trace=None):
    """Quotient and remainder via the whole shifted inverse.

    With h = deg u, computes q = shift(u * shinv(v, h+1), -h-1) for RIGHT (and
    the mirrored product for LEFT), then r = u - q*v resp. u - v*q.  Using
    h+1 keeps the internal shift strictly above deg v whenever deg u >= deg v.
    """
    if v.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    ring = u.ring
    if u.is_zero:
        ring.inv(v.lc)
        return DensePoly.zero(ring), DensePoly.zero(ring)
    h = u.degree
    iv = shinv(v, h + 1, cfg, orientation, trace)
    q = shift(mul_oriented(u, iv, orientation), -h - 1)
    r = u - mul_oriented(q, v, orientation)
    return q, r
