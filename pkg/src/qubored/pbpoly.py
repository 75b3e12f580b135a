"""Exact multilinear polynomials over binary variables.

A monomial is a sorted tuple of distinct variable ids (x^2 = x, so no
exponents), and a polynomial is a map from monomials to nonzero integer
coefficients.  That map is the canonical form: two polynomials are equal
exactly when their term maps are equal.

Coefficients are signed 64-bit integers with checked arithmetic.  Any
operation whose result leaves that range raises CoefficientOverflowError
rather than silently producing a Python long; desk-scale instances stay far
below the bound, and the check catches runaway gadget scaling early.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

I64_MAX = 2**63 - 1
I64_MIN = -(2**63)


class CoefficientOverflowError(OverflowError):
    """Coefficient arithmetic left the signed 64-bit range."""


class InvalidDegreeError(ValueError):
    """Degree outside the range an operation is defined for."""


class MissingVariableError(ValueError):
    """An assignment does not cover every variable of the polynomial."""


class ParseError(ValueError):
    """Malformed polynomial or graph text."""


class VarKind(enum.IntEnum):
    ORIGINAL = 0
    AUXILIARY = 1


class VarId(NamedTuple):
    """A variable: original problem variables sort before auxiliaries."""

    kind: VarKind
    index: int

    @classmethod
    def original(cls, index: int) -> "VarId":
        return cls(VarKind.ORIGINAL, index)

    @classmethod
    def auxiliary(cls, index: int) -> "VarId":
        return cls(VarKind.AUXILIARY, index)

    def __str__(self) -> str:
        return f"{'x' if self.kind == VarKind.ORIGINAL else 'w'}{self.index}"


Monomial = tuple[VarId, ...]
Assignment = Mapping[VarId, int]


def checked_coeff(value: int) -> int:
    """Return value unchanged, or raise if it leaves the 64-bit range."""
    if value > I64_MAX or value < I64_MIN:
        raise CoefficientOverflowError(f"coefficient {value} exceeds 64-bit range")
    return value


def binom(n: int, m: int) -> int:
    """Binomial coefficient extended to all integer arguments.

    Returns 0 whenever m < 0, n < 0 or m > n.  The extension matters for the
    gadget coefficient formulas, whose small-index terms must vanish.
    """
    if m < 0 or n < 0 or m > n:
        return 0
    return checked_coeff(comb(n, m))


def make_monomial(variables: Iterable[VarId]) -> Monomial:
    """Canonical monomial: sorted, duplicates collapsed (x^2 = x)."""
    return tuple(sorted(set(variables)))


def _merge_vars(a: Monomial, b: Monomial) -> Monomial:
    """Sorted set-union of two sorted monomials."""
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] < b[j]:
            out.append(a[i])
            i += 1
        elif b[j] < a[i]:
            out.append(b[j])
            j += 1
        else:
            out.append(a[i])
            i += 1
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def _check_covered(variables: Iterable[VarId], assignment: Assignment) -> None:
    for v in variables:
        if v not in assignment:
            raise MissingVariableError(f"assignment does not cover {v}")


class Polynomial:
    """Sparse multilinear polynomial with exact integer coefficients.

    Instances are immutable; arithmetic returns new polynomials.  The term
    map never stores zero coefficients, so ``==`` on two polynomials is a
    plain dict comparison of canonical forms.
    """

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Union[Mapping[Monomial, int], Iterable[tuple[Iterable[VarId], int]]] = (),
    ):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, int] = {}
        for mono, coeff in items:
            key = make_monomial(mono)
            merged = checked_coeff(acc.get(key, 0) + checked_coeff(coeff))
            if merged:
                acc[key] = merged
            else:
                acc.pop(key, None)
        self._terms = acc

    @classmethod
    def _wrap(cls, canonical: dict[Monomial, int]) -> "Polynomial":
        """Trusted constructor: terms must already be canonical."""
        obj = object.__new__(cls)
        obj._terms = canonical
        return obj

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._wrap({})

    @classmethod
    def constant(cls, value: int) -> "Polynomial":
        return cls._wrap({(): checked_coeff(value)} if value else {})

    def terms(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self._terms.items())

    def monomials(self) -> Iterator[Monomial]:
        return iter(self._terms)

    def coefficient(self, mono: Iterable[VarId]) -> int:
        return self._terms.get(make_monomial(mono), 0)

    @property
    def num_terms(self) -> int:
        return len(self._terms)

    @property
    def degree(self) -> int:
        """Maximum term degree; 0 for the zero polynomial by convention."""
        return max(map(len, self._terms), default=0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def variables(self) -> frozenset[VarId]:
        out: set[VarId] = set()
        for mono in self._terms:
            out.update(mono)
        return frozenset(out)

    def auxiliary_variables(self) -> frozenset[VarId]:
        return frozenset(v for v in self.variables() if v.kind == VarKind.AUXILIARY)

    def evaluate(self, assignment: Assignment) -> int:
        """Exact value at a 0/1 assignment covering every variable."""
        _check_covered(self.variables(), assignment)
        total = 0
        for mono, coeff in self._terms.items():
            for v in mono:
                bit = assignment[v]
                if bit == 0:
                    break
                if bit != 1:
                    raise ValueError(f"assignment value for {v} is {bit}, not 0/1")
            else:
                total += coeff
        return total

    def add_scaled(self, scale: int, other: "Polynomial") -> "Polynomial":
        """Return self + scale * other in canonical form."""
        acc = dict(self._terms)
        for mono, coeff in other._terms.items():
            merged = checked_coeff(acc.get(mono, 0) + checked_coeff(scale * coeff))
            if merged:
                acc[mono] = merged
            else:
                del acc[mono]
        return Polynomial._wrap(acc)

    def scaled(self, scale: int) -> "Polynomial":
        if scale == 0:
            return Polynomial.zero()
        return Polynomial._wrap(
            {m: checked_coeff(scale * c) for m, c in self._terms.items()}
        )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return self.add_scaled(1, other)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self.add_scaled(-1, other)

    def __neg__(self) -> "Polynomial":
        return self.scaled(-1)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        """Multilinear product: repeated variables collapse, like terms merge."""
        acc: dict[Monomial, int] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                key = _merge_vars(ma, mb)
                merged = checked_coeff(acc.get(key, 0) + checked_coeff(ca * cb))
                if merged:
                    acc[key] = merged
                else:
                    del acc[key]
        return Polynomial._wrap(acc)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # mutable-looking container semantics; use == only

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "Polynomial(0)"
        parts = []
        for mono, coeff in sorted(self._terms.items(), key=lambda kv: (len(kv[0]), kv[0])):
            name = "*".join(str(v) for v in mono) or "1"
            parts.append(f"{coeff}*{name}")
        return f"Polynomial({' + '.join(parts)})"


def ones_count(assignment: Assignment, variables: Iterable[VarId]) -> int:
    """Number of variables assigned 1 (the arithmetic, not binary, sum)."""
    total = 0
    for v in variables:
        if v not in assignment:
            raise MissingVariableError(f"assignment does not cover {v}")
        bit = assignment[v]
        if bit not in (0, 1):
            raise ValueError(f"assignment value for {v} is {bit}, not 0/1")
        total += bit
    return total


@dataclass(frozen=True)
class SymmetricBlock:
    """A unit-coefficient symmetric layer: all degree-m products over a var set."""

    vars: frozenset[VarId]
    degree: int

    def __init__(self, vars: Iterable[VarId], degree: int):
        object.__setattr__(self, "vars", frozenset(vars))
        object.__setattr__(self, "degree", degree)
        if degree <= 2:
            raise InvalidDegreeError(f"symmetric block degree must exceed 2, got {degree}")
        if degree > len(self.vars):
            raise InvalidDegreeError(
                f"degree {degree} exceeds block size {len(self.vars)}"
            )

    @property
    def sorted_vars(self) -> tuple[VarId, ...]:
        return tuple(sorted(self.vars))

    def expand(self) -> Polynomial:
        """Sum of all degree-m subsets of the block's variables, coefficient 1."""
        return Polynomial._wrap(
            {mono: 1 for mono in combinations(self.sorted_vars, self.degree)}
        )


# --- text format -----------------------------------------------------------
#
# One term per line: `<coeff> <var>*` with vars like x3 (original) or w2
# (auxiliary); a bare coefficient is the constant term; `#` starts a comment.
# Writing emits terms sorted by (degree, lexicographic variable tuple).

_VAR_TOKEN = re.compile(r"^([xw])(\d+)$")


def _parse_var(token: str, lineno: int) -> VarId:
    match = _VAR_TOKEN.match(token)
    if not match:
        raise ParseError(f"line {lineno}: bad variable token {token!r}")
    kind = VarKind.ORIGINAL if match.group(1) == "x" else VarKind.AUXILIARY
    return VarId(kind, int(match.group(2)))


def parse_polynomial(text: str) -> Polynomial:
    acc: dict[Monomial, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            coeff = int(parts[0])
        except ValueError:
            raise ParseError(f"line {lineno}: bad coefficient {parts[0]!r}") from None
        checked_coeff(coeff)
        mono = make_monomial(_parse_var(tok, lineno) for tok in parts[1:])
        merged = checked_coeff(acc.get(mono, 0) + coeff)
        if merged:
            acc[mono] = merged
        else:
            acc.pop(mono, None)
    return Polynomial._wrap(acc)


def format_polynomial(poly: Polynomial) -> str:
    lines = []
    for mono, coeff in sorted(poly.terms(), key=lambda kv: (len(kv[0]), kv[0])):
        lines.append(" ".join([str(coeff), *(str(v) for v in mono)]))
    if not lines:
        lines.append("0")
    return "\n".join(lines) + "\n"


def load_polynomial(path) -> Polynomial:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_polynomial(fh.read())


def dump_polynomial(poly: Polynomial, path, comments: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for comment in comments:
            fh.write(f"# {comment}\n")
        fh.write(format_polynomial(poly))


def renumber_auxiliaries(poly: Polynomial) -> tuple[Polynomial, dict[VarId, VarId]]:
    """Map auxiliaries to a dense w1..wk numbering, preserving their order."""
    old = sorted(poly.auxiliary_variables())
    mapping = {v: VarId.auxiliary(i) for i, v in enumerate(old, start=1)}
    if not mapping:
        return poly, {}
    # Order-preserving on a sorted tuple, so keys stay canonical.
    terms = {
        tuple(mapping.get(v, v) for v in mono): coeff for mono, coeff in poly.terms()
    }
    return Polynomial._wrap(terms), mapping
