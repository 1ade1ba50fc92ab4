"""Parameter model for the I-function and its exact parameter identities.

An instance of :class:`IFunctionParams` stands for

    I^{m,n}_{p,q}[z | (a_1, alpha_1, A_1), ..., (a_p, alpha_p, A_p)
                     ; (b_1, beta_1, B_1), ..., (b_q, beta_q, B_q)]

with ``upper`` holding the ``(a, alpha, A)`` triples and ``lower`` the
``(b, beta, B)`` triples.  The first ``n`` upper and first ``m`` lower triples
contribute numerator gamma factors, the rest contribute denominator factors.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

__all__ = [
    "GammaTriple",
    "IFunctionParams",
    "validate",
    "reduce",
    "shift",
    "rescale",
    "invert",
    "SCAN_BOUND",
    "COINCIDENCE_TOL",
]

SCAN_BOUND = 64
COINCIDENCE_TOL = 1e-12


@dataclass(frozen=True)
class GammaTriple:
    """One ``(shift, slope, power)`` triple.

    ``a`` is the complex shift, ``alpha`` the slope multiplying ``s`` and
    ``exponent`` the real power the gamma factor is raised to.
    """

    a: complex
    alpha: float
    exponent: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "exponent", float(self.exponent))

    def to_dict(self) -> dict:
        return {
            "a_re": self.a.real,
            "a_im": self.a.imag,
            "alpha": self.alpha,
            "exp": self.exponent,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "GammaTriple":
        return cls(
            complex(float(d.get("a_re", 0.0)), float(d.get("a_im", 0.0))),
            float(d["alpha"]),
            float(d.get("exp", 1.0)),
        )


def _as_triple(t) -> GammaTriple:
    if isinstance(t, GammaTriple):
        return t
    return GammaTriple(*t)


@dataclass(frozen=True)
class IFunctionParams:
    m: int
    n: int
    upper: tuple = field(default_factory=tuple)
    lower: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(_as_triple(t) for t in self.upper))
        object.__setattr__(self, "lower", tuple(_as_triple(t) for t in self.lower))

    @property
    def p(self) -> int:
        return len(self.upper)

    @property
    def q(self) -> int:
        return len(self.lower)

    # the four symmetry groups
    @property
    def upper_num(self):
        return self.upper[: self.n]

    @property
    def upper_den(self):
        return self.upper[self.n :]

    @property
    def lower_num(self):
        return self.lower[: self.m]

    @property
    def lower_den(self):
        return self.lower[self.m :]

    def is_real(self) -> bool:
        return all(t.a.imag == 0.0 for t in self.upper + self.lower)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "upper": [t.to_dict() for t in self.upper],
            "lower": [t.to_dict() for t in self.lower],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "IFunctionParams":
        return cls(
            int(d["m"]),
            int(d["n"]),
            tuple(GammaTriple.from_dict(t) for t in d.get("upper", [])),
            tuple(GammaTriple.from_dict(t) for t in d.get("lower", [])),
        )

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_json(cls, text: str) -> "IFunctionParams":
        return cls.from_dict(json.loads(text))

    def __str__(self):
        def fmt(ts):
            return ", ".join(f"({_fmt_c(t.a)}, {t.alpha:g}, {t.exponent:g})" for t in ts)

        return (
            f"I^{{{self.m},{self.n}}}_{{{self.p},{self.q}}}"
            f"[z | {fmt(self.upper)} ; {fmt(self.lower)}]"
        )


def _fmt_c(c: complex) -> str:
    return f"{c.real:g}" if c.imag == 0 else f"{c:g}"


def _coincidences(params, bound, tol):
    """Right-family singular points that collide with left-family ones."""
    hits = []
    r = np.arange(bound + 1)
    for j, lo in enumerate(params.lower_num):
        s_right = (lo.a + r) / lo.alpha
        for k, up in enumerate(params.upper_num):
            # left family: s = (a - 1 - r') / alpha  <=>  r' = a - 1 - alpha*s
            rp = up.a - 1.0 - up.alpha * s_right
            near = np.rint(rp.real)
            dist = np.abs(rp - near) / up.alpha
            mask = (dist < tol) & (near >= 0) & (near <= bound)
            for idx in np.flatnonzero(mask):
                hits.append((j, int(r[idx]), k, int(near[idx]), complex(s_right[idx])))
    return hits


def validate(params: IFunctionParams, bound: int = SCAN_BOUND, tol: float = COINCIDENCE_TOL):
    """Return every violated structural condition (an empty list means valid).

    The singularity-coincidence scan compares ``s = (b_j + r)/beta_j`` for
    ``j <= m`` with ``s = (a_k - 1 - r')/alpha_k`` for ``k <= n`` over
    ``0 <= r, r' <= bound``.
    """
    out = []
    m, n, p, q = params.m, params.n, params.p, params.q
    if not (isinstance(m, (int, np.integer)) and isinstance(n, (int, np.integer))):
        out.append("m and n must be integers")
        return out
    if not 0 <= m <= q:
        out.append(f"0 <= m <= q fails (m={m}, q={q})")
    if not 0 <= n <= p:
        out.append(f"0 <= n <= p fails (n={n}, p={p})")
    for name, group in (("upper", params.upper), ("lower", params.lower)):
        for i, t in enumerate(group):
            if not (cmath.isfinite(t.a)):
                out.append(f"{name}[{i}]: shift is not finite")
            if not (math.isfinite(t.alpha) and t.alpha > 0):
                out.append(f"{name}[{i}]: slope must be positive (got {t.alpha})")
            if not (math.isfinite(t.exponent) and t.exponent > 0):
                out.append(f"{name}[{i}]: exponent must be positive (got {t.exponent})")
    if out:
        return out
    for j, r, k, rp, s in _coincidences(params, bound, tol):
        out.append(
            f"singularity of lower[{j}] (r={r}) coincides with singularity of "
            f"upper[{k}] (r'={rp}) at s={_fmt_c(s)}"
        )
    return out


def reduce(params: IFunctionParams) -> IFunctionParams:
    """Cancel equal numerator/denominator triples until none remain.

    An upper triple among the first ``n`` equal to a lower triple past ``m``
    removes both and lowers ``n``; an upper triple past ``n`` equal to a lower
    triple among the first ``m`` removes both and lowers ``m``.
    """
    m, n = params.m, params.n
    upper, lower = list(params.upper), list(params.lower)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(m, len(lower)):
                if upper[i] == lower[j]:
                    del upper[i], lower[j]
                    n -= 1
                    changed = True
                    break
            if changed:
                break
        if changed:
            continue
        for i in range(n, len(upper)):
            for j in range(m):
                if upper[i] == lower[j]:
                    del upper[i], lower[j]
                    m -= 1
                    changed = True
                    break
            if changed:
                break
    return IFunctionParams(m, n, tuple(upper), tuple(lower))


def shift(params: IFunctionParams, sigma: complex) -> IFunctionParams:
    """Parameters of ``z**sigma * I(z)``."""
    sigma = complex(sigma)
    return IFunctionParams(
        params.m,
        params.n,
        tuple(GammaTriple(t.a + sigma * t.alpha, t.alpha, t.exponent) for t in params.upper),
        tuple(GammaTriple(t.a + sigma * t.alpha, t.alpha, t.exponent) for t in params.lower),
    )


def rescale(params: IFunctionParams, c: float) -> IFunctionParams:
    """Parameters ``J`` with ``I(z) = c * J(z**c)``."""
    c = float(c)
    if not (math.isfinite(c) and c > 0):
        raise DomainError(f"rescale factor must be positive, got {c}")
    return IFunctionParams(
        params.m,
        params.n,
        tuple(GammaTriple(t.a, c * t.alpha, t.exponent) for t in params.upper),
        tuple(GammaTriple(t.a, c * t.alpha, t.exponent) for t in params.lower),
    )


def invert(params: IFunctionParams) -> IFunctionParams:
    """Parameters ``J`` with ``I(z) = J(1/z)``."""
    return IFunctionParams(
        params.n,
        params.m,
        tuple(GammaTriple(1.0 - t.a, t.alpha, t.exponent) for t in params.lower),
        tuple(GammaTriple(1.0 - t.a, t.alpha, t.exponent) for t in params.upper),
    )
