"""Exact truncated multivariate Laurent series over the rationals.

A :class:`Series` is a finite table ``Monomial -> Fraction`` in the fixed
variables ``q, y, z, λ, H`` together with a :class:`TruncationSpec`.

Truncation semantics
--------------------
``q``, ``y`` and ``H`` only ever carry non-negative exponents and are
truncated *by ideal*: monomials with ``q > q_max``, ``y > y_max`` or
``H >= h_bound`` are silently dropped.  Dropping them is compatible with
multiplication, so the ring laws hold exactly.

``z`` and ``λ`` are Laurent variables with finite windows.  A monomial
outside either window is never dropped; the operation that produced it
raises :class:`TruncationOverflow`.  Silent truncation of a Laurent
variable is not an ideal (``z^max * z * z^-1`` would depend on the
bracketing), so the windows only bound the representation.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Callable, Iterable, Mapping, NamedTuple, Union

__all__ = [
    "VARIABLES",
    "Monomial",
    "TruncationSpec",
    "Series",
    "SeriesError",
    "TruncationMismatch",
    "TruncationOverflow",
    "SingularSeriesError",
    "NormalizationError",
    "add",
    "mul",
    "invert_unit",
    "nth_root",
    "substitute",
    "coefficient",
    "binomial",
]

#: Canonical variable order; also the order of the exponent vector.
VARIABLES = ("q", "y", "z", "λ", "H")

_ALIASES = {"q": 0, "y": 1, "z": 2, "λ": 3, "lam": 3, "lambda": 3, "H": 4}
_NILPOTENT = (0, 1, 4)  # q, y, H


class SeriesError(Exception):
    """Base class for series errors."""


class TruncationMismatch(SeriesError):
    """Operands carry different truncation specs."""


class TruncationOverflow(SeriesError):
    """A z- or λ-exponent left its window."""


class SingularSeriesError(SeriesError):
    """The series has no invertible leading part."""


class NormalizationError(SeriesError):
    """Root extraction on a series whose constant term is not 1."""


def var_index(name: str) -> int:
    try:
        return _ALIASES[name]
    except KeyError:
        raise ValueError(f"unknown variable {name!r}; expected one of {VARIABLES}") from None


class Monomial(NamedTuple):
    q: int = 0
    y: int = 0
    z: int = 0
    lam: int = 0
    H: int = 0

    @classmethod
    def from_mapping(cls, exps: Mapping[str, int]) -> "Monomial":
        v = [0] * 5
        for name, e in exps.items():
            v[var_index(name)] += int(e)
        return cls(*v)

    def as_dict(self) -> dict:
        """Nonzero exponents keyed by canonical variable name."""
        return {name: e for name, e in zip(VARIABLES, self) if e}

    def __mul__(self, other):  # type: ignore[override]
        return Monomial(*(a + b for a, b in zip(self, other)))

    def inverse(self) -> "Monomial":
        return Monomial(*(-a for a in self))

    def text(self) -> str:
        return " ".join(f"{name}^{e}" for name, e in zip(VARIABLES, self) if e)


ONE_MONOMIAL = Monomial()


@dataclass(frozen=True)
class TruncationSpec:
    """Finite representation bounds carried by every series.

    ``h_bound`` is the nilpotency order: ``H**h_bound == 0``.
    """

    q_max: int = 0
    y_max: int = 0
    h_bound: int = 1
    lam_min: int = -64
    lam_max: int = 64
    z_min: int = -64
    z_max: int = 64

    def __post_init__(self):
        if self.q_max < 0 or self.y_max < 0:
            raise ValueError("q_max and y_max must be non-negative")
        if self.h_bound < 1:
            raise ValueError("h_bound must be at least 1")
        if self.lam_min > self.lam_max or self.z_min > self.z_max:
            raise ValueError("empty Laurent window")

    def replace(self, **changes) -> "TruncationSpec":
        fields = dict(self.__dict__)
        fields.update(changes)
        return TruncationSpec(**fields)

    def keeps(self, m: Monomial) -> bool:
        """False if ``m`` lies in the truncation ideal."""
        return m.q <= self.q_max and m.y <= self.y_max and m.H < self.h_bound

    def check_window(self, m: Monomial) -> None:
        if not self.lam_min <= m.lam <= self.lam_max:
            raise TruncationOverflow(
                f"λ-exponent {m.lam} outside window [{self.lam_min}, {self.lam_max}]"
            )
        if not self.z_min <= m.z <= self.z_max:
            raise TruncationOverflow(
                f"z-exponent {m.z} outside window [{self.z_min}, {self.z_max}]"
            )


Scalar = Union[int, Fraction]


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"exact rational expected, got {type(c).__name__}")


def _reduce(raw: Mapping[Monomial, Fraction], trunc: TruncationSpec) -> dict:
    out = {}
    for m, c in raw.items():
        if not c or not trunc.keeps(m):
            continue
        trunc.check_window(m)
        out[m] = c
    return out


class Series:
    """Immutable truncated Laurent series with rational coefficients."""

    __slots__ = ("_terms", "_trunc", "_hash")

    def __init__(self, terms: Mapping = None, trunc: TruncationSpec = None):
        if trunc is None:
            raise TypeError("a TruncationSpec is required")
        raw: dict = {}
        for m, c in (terms or {}).items():
            if not isinstance(m, Monomial):
                m = Monomial.from_mapping(m) if isinstance(m, Mapping) else Monomial(*m)
            if m.q < 0 or m.y < 0 or m.H < 0:
                raise ValueError(f"negative q, y or H exponent in {m}")
            raw[m] = raw.get(m, Fraction(0)) + _as_fraction(c)
        self._terms = _reduce(raw, trunc)
        self._trunc = trunc
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, trunc: TruncationSpec) -> "Series":
        # terms already reduced and checked
        s = object.__new__(cls)
        s._terms = terms
        s._trunc = trunc
        s._hash = None
        return s

    # construction helpers -------------------------------------------------
    @classmethod
    def zero(cls, trunc: TruncationSpec) -> "Series":
        return cls._raw({}, trunc)

    @classmethod
    def const(cls, c, trunc: TruncationSpec) -> "Series":
        return cls({ONE_MONOMIAL: c}, trunc)

    @classmethod
    def one(cls, trunc: TruncationSpec) -> "Series":
        return cls.const(1, trunc)

    @classmethod
    def var(cls, name: str, trunc: TruncationSpec, power: int = 1) -> "Series":
        v = [0] * 5
        v[var_index(name)] = power
        return cls({Monomial(*v): 1}, trunc)

    @classmethod
    def monomial(cls, trunc: TruncationSpec, coeff=1, **exps) -> "Series":
        return cls({Monomial.from_mapping(exps): coeff}, trunc)

    # basic protocol -------------------------------------------------------
    @property
    def trunc(self) -> TruncationSpec:
        return self._trunc

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __getitem__(self, m) -> Fraction:
        if not isinstance(m, Monomial):
            m = Monomial.from_mapping(m) if isinstance(m, Mapping) else Monomial(*m)
        return self._terms.get(m, Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get(ONE_MONOMIAL, Fraction(0))

    def __eq__(self, other):
        if isinstance(other, Series):
            return self._trunc == other._trunc and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({ONE_MONOMIAL: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._trunc, frozenset(self._terms.items())))
        return self._hash

    def _coerce(self, other) -> "Series":
        if isinstance(other, Series):
            if other._trunc != self._trunc:
                raise TruncationMismatch(f"{self._trunc} != {other._trunc}")
            return other
        return Series.const(other, self._trunc)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Series._raw(out, self._trunc)

    __radd__ = __add__

    def __neg__(self):
        return Series._raw({m: -c for m, c in self._terms.items()}, self._trunc)

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Series":
        c = _as_fraction(c)
        if not c:
            return Series.zero(self._trunc)
        return Series._raw({m: c * v for m, v in self._terms.items()}, self._trunc)

    def shift(self, m: Monomial, c=1) -> "Series":
        """Multiply by the single term ``c * m``."""
        return self * Series({m: c}, self._trunc)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Series):
            return NotImplemented
        other = self._coerce(other)
        t = self._trunc
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = Monomial(m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2],
                             m1[3] + m2[3], m1[4] + m2[4])
                if m[0] > t.q_max or m[1] > t.y_max or m[4] >= t.h_bound:
                    continue
                out[m] = out.get(m, 0) + c1 * c2
        out = {m: c for m, c in out.items() if c}
        for m in out:
            t.check_window(m)
        return Series._raw(out, t)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return invert_unit(self) ** (-k)
        result = Series.one(self._trunc)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / _as_fraction(other))
        if isinstance(other, Series):
            return self * invert_unit(other)
        return NotImplemented

    def __rtruediv__(self, other):
        return invert_unit(self) * other

    # structural helpers ---------------------------------------------------
    def filter(self, keep: Callable[[Monomial], bool]) -> "Series":
        return Series._raw({m: c for m, c in self._terms.items() if keep(m)}, self._trunc)

    def with_trunc(self, trunc: TruncationSpec) -> "Series":
        """Re-express under ``trunc``: drops ideal terms, checks windows."""
        return Series(self._terms, trunc)

    def map_monomials(self, f: Callable[[Monomial], Monomial]) -> "Series":
        return Series({f(m): c for m, c in self._terms.items()}, self._trunc)

    def degree_range(self, name: str):
        """(min, max) exponent of ``name`` over stored terms, or None."""
        i = var_index(name)
        exps = [m[i] for m in self._terms]
        return (min(exps), max(exps)) if exps else None

    def coefficient(self, pattern: Mapping[str, int] = None, **exps) -> "Series":
        return coefficient(self, {**(pattern or {}), **exps})

    def substitute(self, name: str, value: "Series") -> "Series":
        return substitute(self, name, value)

    # serialization --------------------------------------------------------
    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for m, c in sorted(self._terms.items()):
            coeff = f"{c.numerator}/{c.denominator}"
            mono = m.text()
            parts.append(f"{coeff} * {mono}" if mono else coeff)
        return " + ".join(parts)

    def __repr__(self):
        return f"Series({self})"

    def to_list(self) -> list:
        return [
            {"coeff": f"{c.numerator}/{c.denominator}", "exp": m.as_dict()}
            for m, c in sorted(self._terms.items())
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_list(), ensure_ascii=False, separators=(",", ":"))

    @classmethod
    def from_list(cls, items: Iterable[Mapping], trunc: TruncationSpec) -> "Series":
        return cls({Monomial.from_mapping(it.get("exp", {})): Fraction(it["coeff"]) for it in items}, trunc)

    @classmethod
    def from_json(cls, text: str, trunc: TruncationSpec) -> "Series":
        return cls.from_list(json.loads(text), trunc)


# ---------------------------------------------------------------------------
# functional API


def add(a: Series, b: Series) -> Series:
    if a.trunc != b.trunc:
        raise TruncationMismatch(f"{a.trunc} != {b.trunc}")
    return a + b


def mul(a: Series, b: Series) -> Series:
    if a.trunc != b.trunc:
        raise TruncationMismatch(f"{a.trunc} != {b.trunc}")
    return a * b


def _is_small(r: Monomial) -> bool:
    # strictly positive in the ideal-truncated variables q, y, H
    return r.q >= 0 and r.y >= 0 and r.H >= 0 and (r.q + r.y + r.H) > 0


def _split_unit(a: Series):
    """Return ``(u, m, n)`` with ``a = u*m*(1 + n)``, ``n`` topologically nilpotent."""
    if a.is_zero():
        raise SingularSeriesError("cannot invert the zero series")
    for m, u in a.terms.items():
        if m.q or m.y or m.H:
            continue
        inv = m.inverse()
        if all(_is_small(t * inv) for t in a.terms if t != m):
            return u, m, inv
    raise SingularSeriesError(f"no invertible leading monomial in {a}")


def _geometric(n_terms: dict, coeff_of_k: Callable[[int], Fraction], trunc: TruncationSpec) -> dict:
    """Σ_k coeff_of_k(k) n^k computed on raw term tables.

    Only the ideal truncation is applied during the loop; each power of n
    strictly raises the q+y+H degree, so the loop terminates.
    """
    acc: dict = {ONE_MONOMIAL: coeff_of_k(0)}
    power: dict = {ONE_MONOMIAL: Fraction(1)}
    k = 0
    while power:
        k += 1
        nxt: dict = {}
        for m1, c1 in power.items():
            for m2, c2 in n_terms.items():
                m = m1 * m2
                if not trunc.keeps(m):
                    continue
                nxt[m] = nxt.get(m, 0) + c1 * c2
        power = {m: c for m, c in nxt.items() if c}
        ck = coeff_of_k(k)
        if ck:
            for m, c in power.items():
                acc[m] = acc.get(m, 0) + ck * c
    return {m: c for m, c in acc.items() if c}


def invert_unit(a: Series) -> Series:
    """Multiplicative inverse of ``a = u*m*(1 + n)``.

    ``m`` is a monomial in z and λ only and every term of ``n`` has
    positive degree in q, y or H, so the geometric series is finite.
    """
    u, m, inv = _split_unit(a)
    t = a.trunc
    n = {}
    for mono, c in a.terms.items():
        if mono != m:
            n[mono * inv] = c / u
    geo = _geometric(n, lambda k: Fraction((-1) ** k), t)
    uinv = 1 / u
    out = {mono * inv: c * uinv for mono, c in geo.items()}
    return Series(out, t)


def binomial(p: Fraction, k: int) -> Fraction:
    """Generalized binomial coefficient C(p, k) for rational ``p``."""
    out = Fraction(1)
    for i in range(k):
        out = out * (p - i) / (i + 1)
    return out


def nth_root(a: Series, num: int, den: int = 1) -> Series:
    """``a ** (num/den)`` for ``a = 1 + n`` via the binomial series."""
    if den <= 0:
        raise ValueError("den must be positive")
    if a.constant_term() != 1:
        raise NormalizationError(f"constant term must be 1, got {a.constant_term()}")
    n = {m: c for m, c in a.terms.items() if m != ONE_MONOMIAL}
    bad = [m for m in n if not _is_small(m)]
    if bad:
        raise SingularSeriesError(f"non-nilpotent terms {bad} after the constant 1")
    p = Fraction(num, den)
    return Series(_geometric(n, lambda k: binomial(p, k), a.trunc), a.trunc)


def substitute(a: Series, name: str, value: Series) -> Series:
    """Replace the variable ``name`` in ``a`` by ``value``.

    Negative powers of the substituted variable use ``invert_unit(value)``.
    """
    if a.trunc != value.trunc:
        raise TruncationMismatch(f"{a.trunc} != {value.trunc}")
    i = var_index(name)
    t = a.trunc
    groups: dict = {}
    for m, c in a.terms.items():
        e = m[i]
        rest = list(m)
        rest[i] = 0
        groups.setdefault(e, {})[Monomial(*rest)] = c
    powers: dict = {0: Series.one(t)}
    inverse = None

    def power(e):
        nonlocal inverse
        if e not in powers:
            if e > 0:
                powers[e] = power(e - 1) * value
            else:
                if inverse is None:
                    inverse = invert_unit(value)
                powers[e] = power(e + 1) * inverse
        return powers[e]

    out = Series.zero(t)
    for e in sorted(groups):
        out = out + Series(groups[e], t) * power(e)
    return out


def coefficient(a: Series, pattern: Mapping[str, int]) -> Series:
    """Sub-series multiplying the monomial ``pattern``.

    Variables named in ``pattern`` are fixed at the given exponent and
    removed; all others are kept.
    """
    fixed = {var_index(k): int(v) for k, v in pattern.items()}
    out = {}
    for m, c in a.terms.items():
        if all(m[i] == e for i, e in fixed.items()):
            v = list(m)
            for i in fixed:
                v[i] = 0
            out[Monomial(*v)] = c
    return Series._raw(out, a.trunc)
