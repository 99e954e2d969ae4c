"""Laurent coefficient arithmetic on the unit circle with certified tails.

Coefficient convention used throughout the package:

    f_hat(n) = (1/2pi) * integral_0^{2pi} f(e^{it}) e^{-int} dt,

so analytic functions (H^2) occupy indices n >= 0 and the co-analytic
half H^2_- the indices n <= -1.

A :class:`FourierWindow` holds a finite contiguous block of coefficients
plus ``tail_bound``, an l2 bound on everything the block omits.  All
window operations propagate these bounds, so downstream matrix entries
come with a per-entry error certificate.
"""

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

TWO_PI = 2.0 * np.pi


class SymbolClassError(ValueError):
    """Raised when a symbol falls outside the class an operation supports."""


# ---------------------------------------------------------------------------
# windows


@dataclass(frozen=True, eq=False)
class FourierWindow:
    """A finite Laurent coefficient block with a certified l2 tail bound.

    ``coeffs[j]`` is the coefficient of index ``offset + j``.  The l2 norm
    of the block underestimates the true L2 norm of the function by at
    most ``tail_bound``.
    """

    offset: int
    coeffs: np.ndarray
    tail_bound: float = 0.0

    def __post_init__(self):
        arr = np.asarray(self.coeffs, dtype=np.complex128)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("window coefficients must be a nonempty 1-D sequence")
        if not (np.isfinite(self.tail_bound) and self.tail_bound >= 0.0):
            raise ValueError("tail_bound must be finite and nonnegative")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)
        object.__setattr__(self, "offset", int(self.offset))
        object.__setattr__(self, "tail_bound", float(self.tail_bound))

    @property
    def lo(self) -> int:
        return self.offset

    @property
    def hi(self) -> int:
        return self.offset + len(self.coeffs) - 1

    def coeff_at(self, n: int) -> complex:
        """Coefficient of index ``n``; zero outside the stored block."""
        j = n - self.offset
        if 0 <= j < len(self.coeffs):
            return complex(self.coeffs[j])
        return 0.0 + 0.0j

    def norm(self) -> float:
        """l2 norm of the stored block."""
        return float(np.linalg.norm(self.coeffs))

    def eval_at(self, z: complex) -> complex:
        """Sum c_n z^n over the stored block (z != 0 if lo < 0)."""
        n = np.arange(self.lo, self.hi + 1)
        return complex(np.sum(self.coeffs * np.power(complex(z), n)))


def delta_window(n: int, value: complex = 1.0) -> FourierWindow:
    return FourierWindow(n, np.array([value], dtype=np.complex128), 0.0)


def window_multiply(f: FourierWindow, g: FourierWindow) -> FourierWindow:
    """Cauchy product of two windows.

    The output tail is propagated as ||f|| tail(g) + ||g|| tail(f)
    + tail(f) tail(g), which also bounds the pointwise error of the
    block coefficients caused by the omitted factor tails.
    """
    coeffs = np.convolve(f.coeffs, g.coeffs)
    tail = f.norm() * g.tail_bound + g.norm() * f.tail_bound + f.tail_bound * g.tail_bound
    return FourierWindow(f.offset + g.offset, coeffs, tail)


def window_conjugate(f: FourierWindow) -> FourierWindow:
    """Coefficients of conj(f): g_hat(n) = conj(f_hat(-n))."""
    return FourierWindow(-f.hi, np.conj(f.coeffs[::-1]), f.tail_bound)


def window_scale(f: FourierWindow, c: complex) -> FourierWindow:
    return FourierWindow(f.offset, f.coeffs * complex(c), abs(c) * f.tail_bound)


def window_shift(f: FourierWindow, k: int) -> FourierWindow:
    return FourierWindow(f.offset + k, f.coeffs, f.tail_bound)


def window_add(f: FourierWindow, g: FourierWindow) -> FourierWindow:
    lo = min(f.lo, g.lo)
    hi = max(f.hi, g.hi)
    out = np.zeros(hi - lo + 1, dtype=np.complex128)
    out[f.lo - lo : f.hi - lo + 1] += f.coeffs
    out[g.lo - lo : g.hi - lo + 1] += g.coeffs
    return FourierWindow(lo, out, f.tail_bound + g.tail_bound)


def window_sub(f: FourierWindow, g: FourierWindow) -> FourierWindow:
    return window_add(f, window_scale(g, -1.0))


def window_inner_product(f: FourierWindow, g: FourierWindow) -> complex:
    """l2 pairing sum f_hat(n) conj(g_hat(n)) over the common support.

    Realizes the L2(T) inner product; the absolute error is at most
    ||f|| tail(g) + ||g|| tail(f) + tail(f) tail(g).
    """
    lo = max(f.lo, g.lo)
    hi = min(f.hi, g.hi)
    if lo > hi:
        return 0.0 + 0.0j
    fs = f.coeffs[lo - f.lo : hi - f.lo + 1]
    gs = g.coeffs[lo - g.lo : hi - g.lo + 1]
    return complex(np.vdot(gs, fs))


def project_analytic(f: FourierWindow) -> FourierWindow:
    """Keep indices n >= 0 (the H^2 part).  Tail bound is preserved."""
    if f.hi < 0:
        return FourierWindow(0, np.zeros(1, dtype=np.complex128), f.tail_bound)
    lo = max(f.lo, 0)
    return FourierWindow(lo, f.coeffs[lo - f.lo :], f.tail_bound)


def project_antianalytic(f: FourierWindow) -> FourierWindow:
    """Keep indices n <= -1 (the H^2_- part)."""
    if f.lo > -1:
        return FourierWindow(-1, np.zeros(1, dtype=np.complex128), f.tail_bound)
    hi = min(f.hi, -1)
    return FourierWindow(f.lo, f.coeffs[: hi - f.lo + 1], f.tail_bound)


# ---------------------------------------------------------------------------
# Blaschke products


def blaschke_factor_value(lam: complex, z: complex) -> complex:
    return (z - lam) / (1.0 - np.conj(lam) * z)


def blaschke_factor_coeffs(lam: complex, n_max: int) -> FourierWindow:
    """Analytic expansion of the factor (z - lam)/(1 - conj(lam) z).

    Coefficients: c_0 = -lam and c_n = (1 - |lam|^2) conj(lam)^{n-1} for
    1 <= n <= n_max.  The omitted geometric tail is certified:
    tail = (1 - |lam|^2) |lam|^{n_max} / sqrt(1 - |lam|^2).
    """
    lam = complex(lam)
    r = abs(lam)
    if r >= 1.0:
        raise ValueError("Blaschke factor zero must lie in the open unit disc")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if lam == 0:
        return delta_window(1)
    c = np.empty(n_max + 1, dtype=np.complex128)
    c[0] = -lam
    c[1:] = (1.0 - r * r) * np.conj(lam) ** np.arange(n_max)
    tail = (1.0 - r * r) * r**n_max / np.sqrt(1.0 - r * r)
    return FourierWindow(0, c, float(tail))


def geometric_window(lam: complex, n_max: int) -> FourierWindow:
    """Expansion of 1/(1 - conj(lam) z): coefficients conj(lam)^n."""
    lam = complex(lam)
    r = abs(lam)
    if r >= 1.0:
        raise ValueError("pole parameter must lie in the open unit disc")
    if lam == 0:
        return delta_window(0)
    c = np.conj(lam) ** np.arange(n_max + 1)
    tail = r ** (n_max + 1) / np.sqrt(1.0 - r * r)
    return FourierWindow(0, c, float(tail))


def _factor_width(r: float, tol: float) -> int:
    """Smallest n with sqrt(1 - r^2) * r^n <= tol (geometric l2 tail)."""
    if r == 0.0:
        return 1
    n = int(np.ceil(np.log(max(tol, 1e-300) / np.sqrt(1.0 - r * r)) / np.log(r)))
    return max(n, 1)


@dataclass(frozen=True)
class BlaschkeProduct:
    """A finite Blaschke product: unimodular constant times factors b_lam.

    ``zeros`` lie in the open unit disc; repeated zeros are allowed and
    zeros at the origin encode plain powers of z.
    """

    unimodular_constant: complex = 1.0 + 0.0j
    zeros: tuple = ()

    def __post_init__(self):
        c = complex(self.unimodular_constant)
        if abs(abs(c) - 1.0) > 1e-12:
            raise ValueError("constant must have modulus 1 within 1e-12")
        zs = tuple(complex(z) for z in self.zeros)
        for z in zs:
            if abs(z) >= 1.0:
                raise ValueError("every Blaschke zero must satisfy |z| < 1")
        object.__setattr__(self, "unimodular_constant", c)
        object.__setattr__(self, "zeros", zs)

    @property
    def degree(self) -> int:
        return len(self.zeros)

    def __call__(self, z: complex) -> complex:
        v = self.unimodular_constant
        for lam in self.zeros:
            v *= blaschke_factor_value(lam, z)
        return v

    def at_zero(self) -> complex:
        return self(0.0)

    def window(self, tol: float) -> FourierWindow:
        """Analytic coefficient window with certified tail <= tol."""
        if tol <= 0:
            raise ValueError("tol must be positive")
        return window_scale(_blaschke_product_window(self.zeros, tol), self.unimodular_constant)


def _blaschke_product_window(zeros, tol: float) -> FourierWindow:
    if not zeros:
        return delta_window(0)
    d = len(zeros)
    budget = tol / (2.0 * d)
    for _ in range(8):
        w = delta_window(0)
        for lam in zeros:
            n = _factor_width(abs(lam), budget)
            w = window_multiply(w, blaschke_factor_coeffs(lam, n))
        if w.tail_bound <= tol:
            return w
        budget /= 8.0
    raise RuntimeError("could not certify Blaschke product tail; zeros too close to the circle")


# ---------------------------------------------------------------------------
# symbols


@dataclass(frozen=True, eq=False)
class LaurentPoly:
    """Finite Laurent polynomial: coeffs[j] multiplies z^(offset + j)."""

    offset: int
    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.coeffs, dtype=np.complex128).copy()
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("Laurent polynomial needs a nonempty coefficient vector")
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)
        object.__setattr__(self, "offset", int(self.offset))


@dataclass(frozen=True)
class BlaschkeQuotient:
    """Unimodular symbol c * z^m * prod b_lam with m in Z."""

    constant: complex = 1.0 + 0.0j
    z_power: int = 0
    zeros: tuple = ()

    def __post_init__(self):
        c = complex(self.constant)
        if abs(abs(c) - 1.0) > 1e-12:
            raise ValueError("constant must have modulus 1 within 1e-12")
        zs = tuple(complex(z) for z in self.zeros)
        for z in zs:
            if abs(z) >= 1.0:
                raise ValueError("every Blaschke zero must satisfy |z| < 1")
        object.__setattr__(self, "constant", c)
        object.__setattr__(self, "z_power", int(self.z_power))
        object.__setattr__(self, "zeros", zs)


@dataclass(frozen=True)
class Conjugate:
    of: "SymbolExpr"


@dataclass(frozen=True)
class SumConst:
    term: "SymbolExpr"
    constant: complex


@dataclass(frozen=True)
class PiecewiseArcs:
    """Piecewise-constant symbol on arcs covering [0, 2pi) disjointly.

    ``arcs`` is a sequence of (t0, t1, value); after sorting the arcs must
    tile [0, 2pi] exactly.
    """

    arcs: tuple

    def __post_init__(self):
        parsed = sorted(
            ((float(a), float(b), complex(v)) for a, b, v in self.arcs),
            key=lambda arc: (arc[0], arc[1]),
        )
        if not parsed:
            raise ValueError("need at least one arc")
        if abs(parsed[0][0]) > 1e-12 or abs(parsed[-1][1] - TWO_PI) > 1e-12:
            raise ValueError("arcs must cover [0, 2pi)")
        for (_, b, _), (a2, _, _) in zip(parsed, parsed[1:]):
            if abs(b - a2) > 1e-12:
                raise ValueError("arcs must be disjoint and contiguous")
        for a, b, _ in parsed:
            if not b > a:
                raise ValueError("each arc needs positive length")
        object.__setattr__(self, "arcs", tuple(parsed))


SymbolExpr = Union[LaurentPoly, BlaschkeQuotient, Conjugate, SumConst, PiecewiseArcs]


def inner_symbol(u: BlaschkeProduct) -> BlaschkeQuotient:
    """Represent a finite Blaschke product as a unimodular symbol."""
    return BlaschkeQuotient(u.unimodular_constant, 0, u.zeros)


def conjugated(phi: SymbolExpr) -> SymbolExpr:
    """conj(phi), collapsing double conjugation."""
    if isinstance(phi, Conjugate):
        return phi.of
    return Conjugate(phi)


def shift_symbol(power: int = 1) -> LaurentPoly:
    """The monomial z^power."""
    return LaurentPoly(power, [1.0])


def constant_symbol(c: complex) -> LaurentPoly:
    return LaurentPoly(0, [c])


# -- structural classification ----------------------------------------------


def constant_value(phi: SymbolExpr) -> Optional[complex]:
    """Constant value of phi if it simplifies to one, else None."""
    if isinstance(phi, LaurentPoly):
        nz = np.flatnonzero(phi.coeffs)
        if nz.size == 0:
            return 0.0 + 0.0j
        if nz.size == 1 and phi.offset + int(nz[0]) == 0:
            return complex(phi.coeffs[nz[0]])
        return None
    if isinstance(phi, BlaschkeQuotient):
        if phi.z_power == 0 and not phi.zeros:
            return phi.constant
        return None
    if isinstance(phi, Conjugate):
        v = constant_value(phi.of)
        return None if v is None else np.conj(v)
    if isinstance(phi, SumConst):
        v = constant_value(phi.term)
        return None if v is None else v + complex(phi.constant)
    if isinstance(phi, PiecewiseArcs):
        vals = [v for _, _, v in phi.arcs]
        if all(abs(v - vals[0]) <= 1e-15 for v in vals):
            return vals[0]
        return None
    raise TypeError(f"not a symbol: {phi!r}")


def is_unimodular(phi: SymbolExpr) -> bool:
    """Structural check that |phi| = 1 a.e. on the circle."""
    if isinstance(phi, BlaschkeQuotient):
        return True
    if isinstance(phi, Conjugate):
        return is_unimodular(phi.of)
    if isinstance(phi, PiecewiseArcs):
        return all(abs(abs(v) - 1.0) <= 1e-12 for _, _, v in phi.arcs)
    c = constant_value(phi)
    if c is not None:
        return abs(abs(c) - 1.0) <= 1e-12
    if isinstance(phi, LaurentPoly):
        nz = np.flatnonzero(phi.coeffs)
        return nz.size == 1 and abs(abs(phi.coeffs[nz[0]]) - 1.0) <= 1e-12
    if isinstance(phi, SumConst):
        return complex(phi.constant) == 0 and is_unimodular(phi.term)
    return False


def is_analytic(phi: SymbolExpr) -> bool:
    """Structural check that phi has no negative Laurent coefficients."""
    if isinstance(phi, LaurentPoly):
        nz = np.flatnonzero(phi.coeffs)
        return nz.size == 0 or phi.offset + int(nz[0]) >= 0
    if isinstance(phi, BlaschkeQuotient):
        return phi.z_power >= 0
    if isinstance(phi, SumConst):
        return is_analytic(phi.term)
    if isinstance(phi, Conjugate):
        return is_coanalytic(phi.of)
    if isinstance(phi, PiecewiseArcs):
        return constant_value(phi) is not None
    return False


def is_coanalytic(phi: SymbolExpr) -> bool:
    """Structural check that phi has no positive Laurent coefficients."""
    if isinstance(phi, LaurentPoly):
        nz = np.flatnonzero(phi.coeffs)
        return nz.size == 0 or phi.offset + int(nz[-1]) <= 0
    if isinstance(phi, BlaschkeQuotient):
        return not phi.zeros and phi.z_power <= 0
    if isinstance(phi, SumConst):
        return is_coanalytic(phi.term)
    if isinstance(phi, Conjugate):
        return is_analytic(phi.of)
    if isinstance(phi, PiecewiseArcs):
        return constant_value(phi) is not None
    return False


def is_inner(phi: SymbolExpr) -> bool:
    return is_unimodular(phi) and is_analytic(phi)


def as_blaschke_quotient(phi: SymbolExpr) -> Optional[BlaschkeQuotient]:
    """View phi as a BlaschkeQuotient if its structure permits."""
    if isinstance(phi, BlaschkeQuotient):
        return phi
    if isinstance(phi, LaurentPoly):
        nz = np.flatnonzero(phi.coeffs)
        if nz.size == 1 and abs(abs(phi.coeffs[nz[0]]) - 1.0) <= 1e-12:
            return BlaschkeQuotient(complex(phi.coeffs[nz[0]]), phi.offset + int(nz[0]), ())
    return None


# -- evaluation ---------------------------------------------------------------


def eval_symbol(phi: SymbolExpr, theta: float) -> complex:
    """Pointwise value phi(e^{i theta}) for theta in [0, 2pi).

    Piecewise symbols are undefined on arc endpoints (a null set); hitting
    one exactly raises ValueError.
    """
    z = np.exp(1j * theta)
    if isinstance(phi, LaurentPoly):
        n = np.arange(phi.offset, phi.offset + len(phi.coeffs))
        return complex(np.sum(phi.coeffs * np.exp(1j * theta * n)))
    if isinstance(phi, BlaschkeQuotient):
        v = phi.constant * z**phi.z_power
        for lam in phi.zeros:
            v *= blaschke_factor_value(lam, z)
        return complex(v)
    if isinstance(phi, Conjugate):
        return complex(np.conj(eval_symbol(phi.of, theta)))
    if isinstance(phi, SumConst):
        return eval_symbol(phi.term, theta) + complex(phi.constant)
    if isinstance(phi, PiecewiseArcs):
        for t0, t1, v in phi.arcs:
            if theta == t0 or theta == t1:
                raise ValueError("symbol value is undefined on an arc endpoint")
            if t0 < theta < t1:
                return v
        raise ValueError("angle must lie in [0, 2pi)")
    raise TypeError(f"not a symbol: {phi!r}")


# -- coefficient windows ------------------------------------------------------


def _sum_inv_sq_tail(n: int) -> float:
    # bound on sum_{k >= n} 1/k^2
    if n <= 1:
        return np.pi * np.pi / 6.0
    return 1.0 / (n - 1)


def _piecewise_window(phi: PiecewiseArcs, lo: int, hi: int) -> FourierWindow:
    ns = np.arange(lo, hi + 1)
    out = np.zeros(len(ns), dtype=np.complex128)
    for t0, t1, v in phi.arcs:
        for j, n in enumerate(ns):
            if n == 0:
                out[j] += v * (t1 - t0) / TWO_PI
            else:
                out[j] += v * (np.exp(-1j * n * t0) - np.exp(-1j * n * t1)) / (TWO_PI * 1j * n)
    # jump magnitude controls the O(1/n) decay
    vals = [v for _, _, v in phi.arcs]
    jumps = sum(abs(vals[i] - vals[i - 1]) for i in range(len(vals)))
    tail_sq = (jumps / TWO_PI) ** 2 * (_sum_inv_sq_tail(hi + 1) + _sum_inv_sq_tail(-lo + 1))
    tail = float(np.sqrt(tail_sq))
    if lo > 0 or hi < 0:
        c0 = sum(v * (t1 - t0) / TWO_PI for t0, t1, v in phi.arcs)
        tail += abs(c0)
    return FourierWindow(lo, out, tail)


def _cover(w: FourierWindow, lo: int, hi: int) -> FourierWindow:
    """Zero-pad a window so its index range covers [lo, hi]."""
    nlo = min(w.lo, lo)
    nhi = max(w.hi, hi)
    out = np.zeros(nhi - nlo + 1, dtype=np.complex128)
    out[w.lo - nlo : w.hi - nlo + 1] = w.coeffs
    return FourierWindow(nlo, out, w.tail_bound)


def symbol_to_window(phi: SymbolExpr, lo: int, hi: int, tol: float) -> FourierWindow:
    """Coefficient window of phi covering at least [lo, hi].

    For rational variants the window is widened automatically until the
    certified geometric tail is <= tol (the result may extend beyond the
    requested interval).  For PiecewiseArcs the window covers exactly
    [lo, hi] and the O(1/n) tail is reported as-is, not forced under tol.
    """
    if lo > hi:
        raise ValueError("empty index interval")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if isinstance(phi, LaurentPoly):
        w = FourierWindow(phi.offset, phi.coeffs, 0.0)
        return _cover(w, lo, hi)
    if isinstance(phi, BlaschkeQuotient):
        # certified block: every omitted coefficient is covered by the tail
        w = _blaschke_product_window(phi.zeros, tol)
        w = window_shift(window_scale(w, phi.constant), phi.z_power)
        return _cover(w, lo, hi)
    if isinstance(phi, Conjugate):
        return window_conjugate(symbol_to_window(phi.of, -hi, -lo, tol))
    if isinstance(phi, SumConst):
        w = symbol_to_window(phi.term, min(lo, 0), max(hi, 0), tol)
        return window_add(w, delta_window(0, phi.constant))
    if isinstance(phi, PiecewiseArcs):
        return _piecewise_window(phi, lo, hi)
    raise TypeError(f"not a symbol: {phi!r}")


# ---------------------------------------------------------------------------
# JSON schema


def _c2j(c: complex):
    c = complex(c)
    return [c.real, c.imag]


def _j2c(v) -> complex:
    if not (isinstance(v, (list, tuple)) and len(v) == 2):
        raise ValueError("complex values must be [re, im] pairs")
    return complex(float(v[0]), float(v[1]))


def symbol_to_json(phi: SymbolExpr) -> dict:
    if isinstance(phi, LaurentPoly):
        return {"kind": "laurent", "offset": phi.offset, "coeffs": [_c2j(c) for c in phi.coeffs]}
    if isinstance(phi, BlaschkeQuotient):
        return {
            "kind": "blaschke_quotient",
            "constant": _c2j(phi.constant),
            "z_power": phi.z_power,
            "zeros": [_c2j(z) for z in phi.zeros],
        }
    if isinstance(phi, Conjugate):
        return {"kind": "conjugate", "of": symbol_to_json(phi.of)}
    if isinstance(phi, SumConst):
        return {"kind": "sum", "left": symbol_to_json(phi.term), "constant": _c2j(phi.constant)}
    if isinstance(phi, PiecewiseArcs):
        return {
            "kind": "piecewise",
            "arcs": [{"from": a, "to": b, "value": _c2j(v)} for a, b, v in phi.arcs],
        }
    raise TypeError(f"not a symbol: {phi!r}")


def symbol_from_json(obj: dict) -> SymbolExpr:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ValueError("symbol JSON must be an object with a 'kind' field")
    kind = obj["kind"]
    if kind == "laurent":
        return LaurentPoly(int(obj["offset"]), [_j2c(c) for c in obj["coeffs"]])
    if kind == "blaschke_quotient":
        return BlaschkeQuotient(
            _j2c(obj.get("constant", [1.0, 0.0])),
            int(obj.get("z_power", 0)),
            tuple(_j2c(z) for z in obj.get("zeros", [])),
        )
    if kind == "conjugate":
        return Conjugate(symbol_from_json(obj["of"]))
    if kind == "sum":
        return SumConst(symbol_from_json(obj["left"]), _j2c(obj["constant"]))
    if kind == "piecewise":
        return PiecewiseArcs(tuple((a["from"], a["to"], _j2c(a["value"])) for a in obj["arcs"]))
    raise ValueError(f"unknown symbol kind: {kind!r}")


def blaschke_to_json(u: BlaschkeProduct) -> dict:
    return {
        "kind": "blaschke_product",
        "constant": _c2j(u.unimodular_constant),
        "zeros": [_c2j(z) for z in u.zeros],
    }


def blaschke_from_json(obj: dict) -> BlaschkeProduct:
    if not isinstance(obj, dict):
        raise ValueError("inner-function JSON must be an object")
    kind = obj.get("kind", "blaschke_product")
    if kind == "blaschke_quotient":
        zp = int(obj.get("z_power", 0))
        if zp < 0:
            raise ValueError("an inner function cannot carry a negative power of z")
        zeros = tuple(_j2c(z) for z in obj.get("zeros", [])) + (0.0 + 0.0j,) * zp
        return BlaschkeProduct(_j2c(obj.get("constant", [1.0, 0.0])), zeros)
    if kind != "blaschke_product":
        raise ValueError(f"unknown inner-function kind: {kind!r}")
    return BlaschkeProduct(
        _j2c(obj.get("constant", [1.0, 0.0])),
        tuple(_j2c(z) for z in obj.get("zeros", [])),
    )
