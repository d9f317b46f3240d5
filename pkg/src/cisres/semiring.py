"""The commutative idempotent semiring contract.

A :class:`Semiring` is a stateless handle describing one carrier: it knows
its zero and one, how to add and multiply canonical payloads, and how to
parse and print them. Values are :class:`CisValue` objects pairing a handle
with a canonical payload, so ``a + b`` and ``a * b`` work directly and
structural equality is semantic equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import reduce
from typing import Any, Callable, Iterable, Sequence

from .errors import InstanceMismatchError, InvalidParameterError


class Semiring:
    """Base class for concrete carriers.

    Subclasses are frozen dataclasses whose fields are the instance
    parameters; two handles with equal parameters are interchangeable.
    Subclasses implement the payload-level hooks ``_add``, ``_mul``,
    ``_zero``, ``_one``, ``_canonical``, ``_parse``, ``_format`` and
    ``_random``.
    """

    tag: str = "abstract"

    # payload hooks --------------------------------------------------------
    def _zero(self):
        raise NotImplementedError

    def _one(self):
        raise NotImplementedError

    def _add(self, p, q):
        raise NotImplementedError

    def _mul(self, p, q):
        raise NotImplementedError

    def _canonical(self, raw):
        return raw

    def _parse(self, text: str):
        raise NotImplementedError

    def _format(self, payload) -> str:
        return repr(payload)

    def _random(self, rng):
        raise NotImplementedError

    def _samples(self) -> list:
        raise NotImplementedError

    # public surface -------------------------------------------------------
    @property
    def zero(self) -> "CisValue":
        return CisValue(self, self._zero())

    @property
    def one(self) -> "CisValue":
        return CisValue(self, self._one())

    def value(self, raw) -> "CisValue":
        """Canonicalize a raw payload and wrap it."""
        return CisValue(self, self._canonical(raw))

    def parse(self, text: str) -> "CisValue":
        return CisValue(self, self._parse(text.strip()))

    def format(self, value: "CisValue") -> str:
        self._check(value)
        return self._format(value.payload)

    def add(self, a: "CisValue", b: "CisValue") -> "CisValue":
        return self._check(a) + self._check(b)

    def mul(self, a: "CisValue", b: "CisValue") -> "CisValue":
        return self._check(a) * self._check(b)

    def eq(self, a: "CisValue", b: "CisValue") -> bool:
        return self._check(a) == self._check(b)

    def sum(self, values: Iterable["CisValue"]) -> "CisValue":
        return reduce(self.add, values, self.zero)

    def product(self, values: Iterable["CisValue"]) -> "CisValue":
        return reduce(self.mul, values, self.one)

    def random_value(self, rng) -> "CisValue":
        """Draw a value from this carrier's sampling pool using ``rng``."""
        return CisValue(self, self._random(rng))

    def samples(self) -> list["CisValue"]:
        """A curated list of at least six distinct values for axiom checks."""
        return [CisValue(self, p) for p in self._samples()]

    def params(self) -> dict[str, Any]:
        """Instance parameters in a JSON-friendly form."""
        return {}

    def _check(self, v: "CisValue") -> "CisValue":
        if not isinstance(v, CisValue) or not _same(v.semiring, self):
            raise InstanceMismatchError(f"value {v!r} does not belong to {self}")
        return v


def _same(s: Semiring, t: Semiring) -> bool:
    return s is t or s == t


@dataclass(frozen=True)
class CisValue:
    """An element of one semiring instance, held in canonical form."""

    semiring: Semiring
    payload: Any

    def __add__(self, other: "CisValue") -> "CisValue":
        s = self.semiring
        if not isinstance(other, CisValue) or not _same(s, other.semiring):
            raise InstanceMismatchError(f"cannot add {self} and {other}")
        return CisValue(s, s._add(self.payload, other.payload))

    def __mul__(self, other: "CisValue") -> "CisValue":
        s = self.semiring
        if not isinstance(other, CisValue) or not _same(s, other.semiring):
            raise InstanceMismatchError(f"cannot multiply {self} and {other}")
        return CisValue(s, s._mul(self.payload, other.payload))

    def is_zero(self) -> bool:
        return self.payload == self.semiring._zero()

    def __str__(self) -> str:
        return self.semiring._format(self.payload)

    def __repr__(self) -> str:
        return f"CisValue({self.semiring.tag}, {self.semiring._format(self.payload)})"


def cis_add(a: CisValue, b: CisValue) -> CisValue:
    return a + b


def cis_mul(a: CisValue, b: CisValue) -> CisValue:
    return a * b


def same_instance(values: Iterable[CisValue]) -> Semiring:
    """Return the common semiring of ``values`` or raise."""
    values = list(values)
    if not values:
        raise InvalidParameterError("empty value list")
    s = values[0].semiring
    for v in values[1:]:
        if not isinstance(v, CisValue) or not _same(v.semiring, s):
            raise InstanceMismatchError(f"{v!r} is not in instance {s.tag}")
    return s


# ---------------------------------------------------------------------------
# axiom checking

# (name, arity, predicate over (semiring, *operands))
AXIOMS: tuple[tuple[str, int, Callable[..., bool]], ...] = (
    ("add-commutative", 2, lambda s, a, b: a + b == b + a),
    ("add-associative", 3, lambda s, a, b, c: (a + b) + c == a + (b + c)),
    ("add-identity", 1, lambda s, a: a + s.zero == a),
    ("add-idempotent", 1, lambda s, a: a + a == a),
    ("mul-commutative", 2, lambda s, a, b: a * b == b * a),
    ("mul-associative", 3, lambda s, a, b, c: (a * b) * c == a * (b * c)),
    ("mul-identity", 1, lambda s, a: a * s.one == a),
    ("mul-annihilation", 1, lambda s, a: a * s.zero == s.zero),
    ("distributive", 3, lambda s, a, b, c: (a + b) * c == a * c + b * c),
)


@dataclass
class AxiomResult:
    name: str
    passed: bool
    checked: int
    witness: tuple | None = None


@dataclass
class AxiomReport:
    instance: str
    results: list[AxiomResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[AxiomResult]:
        return [r for r in self.results if not r.passed]

    def __getitem__(self, name: str) -> AxiomResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)


def check_axioms(semiring: Semiring, samples: Sequence[CisValue],
                 budget: int = 100_000) -> AxiomReport:
    """Evaluate every semiring axiom over tuples drawn from ``samples``.

    Each axiom is tried on at most ``budget`` tuples (in lexicographic
    order). The first failing tuple is kept as the witness.
    """
    samples = list(samples)
    if not samples:
        raise InvalidParameterError("check_axioms needs at least one sample")
    for v in samples:
        semiring._check(v)
    report = AxiomReport(semiring.tag)
    for name, arity, holds in AXIOMS:
        checked = 0
        witness = None
        for args in itertools.islice(itertools.product(samples, repeat=arity), budget):
            checked += 1
            if not holds(semiring, *args):
                witness = args
                break
        report.results.append(AxiomResult(name, witness is None, checked, witness))
    return report
