"""Exact coefficient fields: the rationals and prime fields GF(p).

Scalars are ordinary Fraction objects or ModP wrappers; both support the
arithmetic operators, truthiness (zero is falsy), and exact equality, which
is all the rest of the package relies on. A field object only knows how to
make scalars and what to call itself.
"""

from fractions import Fraction


class ModP:
    """An element of GF(p). Immutable; p is assumed prime (checked by PrimeField)."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        object.__setattr__(self, "value", value % p)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, val):
        raise AttributeError("ModP is immutable")

    def _lift(self, other):
        if isinstance(other, ModP):
            assert other.p == self.p, "mixed characteristics"
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._lift(other)
        return NotImplemented if v is NotImplemented else ModP(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._lift(other)
        return NotImplemented if v is NotImplemented else ModP(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._lift(other)
        return NotImplemented if v is NotImplemented else ModP(v - self.value, self.p)

    def __mul__(self, other):
        v = self._lift(other)
        return NotImplemented if v is NotImplemented else ModP(self.value * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        return ModP(self.value * pow(v, -1, self.p), self.p)

    def __rtruediv__(self, other):
        v = self._lift(other)
        if v is NotImplemented:
            return NotImplemented
        return ModP(v * pow(self.value, -1, self.p), self.p)

    def __neg__(self):
        return ModP(-self.value, self.p)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


class Rationals:
    """The field of rationals, scalars are Fraction."""

    name = "rational"
    characteristic = 0

    def of(self, n):
        return Fraction(n)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "Rationals()"


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """GF(p) for a prime p."""

    def __init__(self, p):
        assert _is_prime(p), f"{p} is not prime"
        self.p = p
        self.name = f"p={p}"
        self.characteristic = p

    def of(self, n):
        return ModP(n, self.p)

    @property
    def zero(self):
        return ModP(0, self.p)

    @property
    def one(self):
        return ModP(1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


def field_from_name(name):
    """Parse "rational" or "p=<prime>" into a field object."""
    if name == "rational":
        return Rationals()
    if name.startswith("p="):
        try:
            p = int(name[2:])
        except ValueError:
            raise ValueError(f"bad field spec {name!r}") from None
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        return PrimeField(p)
    raise ValueError(f"bad field spec {name!r}")
