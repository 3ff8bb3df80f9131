"""Exact residue arithmetic mod p^e (e <= 3) and valuation-aware factorials."""
from __future__ import annotations


class NotAUnit(ArithmeticError):
    pass


class NonResidue(ArithmeticError):
    pass


class NegativeValuation(ArithmeticError):
    pass


class PrimePower:
    """Working modulus p^e for an odd prime p, with e in {1,2,3}."""

    __slots__ = ("p", "e", "m")

    def __init__(self, p: int, e: int = 1):
        if e not in (1, 2, 3):
            raise ValueError("exponent must be 1, 2 or 3")
        if p < 3 or p % 2 == 0:
            raise ValueError("p must be an odd prime >= 3")
        self.p = p
        self.e = e
        self.m = p**e

    def __eq__(self, other):
        return isinstance(other, PrimePower) and (self.p, self.e) == (other.p, other.e)

    def __hash__(self):
        return hash((self.p, self.e))

    def __repr__(self):
        return f"PrimePower({self.p}, {self.e})"


def pow_mod(base: int, exp: int, pp: PrimePower) -> int:
    if exp < 0:
        raise ValueError("exponent must be nonnegative")
    return pow(base % pp.m, exp, pp.m)


def inv_mod(a: int, pp: PrimePower) -> int:
    if a % pp.p == 0:
        raise NotAUnit(f"{a} is divisible by {pp.p}")
    return pow(a, -1, pp.m)


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1, by binary reciprocity."""
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be a positive odd integer")
    a %= n
    t = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                t = -t
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            t = -t
        a %= n
    return t if n == 1 else 0


def sqrt_mod_p(a: int, p: int) -> int:
    """Square root of a mod p in [0, (p-1)/2], Tonelli-Shanks; NonResidue if none."""
    a %= p
    if a == 0:
        return 0
    if jacobi(a, p) == -1:
        raise NonResidue(f"{a} is not a square mod {p}")
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
        return min(r, p - r)
    # p = q*2^s + 1 with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while jacobi(z, p) != -1:
        z += 1
    c = pow(z, q, p)
    r = pow(a, (q + 1) // 2, p)
    t = pow(a, q, p)
    m = s
    while t != 1:
        # order of t is 2^i
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        r = r * b % p
        c = b * b % p
        t = t * c % p
        m = i
    return min(r, p - r)


def factorial_nu(n: int, p: int) -> int:
    """p-adic valuation of n! (Legendre's formula)."""
    nu = 0
    while n:
        n //= p
        nu += n
    return nu


def factorial_unit(n: int, pp: PrimePower) -> int:
    """Unit part w(n) of n! = p^nu(n!) * w(n), mod p^e.

    w(n) = (prod of j <= n with p not dividing j) * w(n // p).
    """
    p, pe = pp.p, pp.m
    u = 1
    while n > 1:
        for j in range(2, n + 1):
            if j % p:
                u = u * j % pe
        n //= p
    return u


class ScaledResidue:
    """p^nu * unit mod p^e, with unit coprime to p; canonical zero is (nu=e, unit=1)."""

    __slots__ = ("pp", "nu", "unit")

    def __init__(self, pp: PrimePower, nu: int, unit: int):
        if nu < 0:
            raise NegativeValuation(f"valuation {nu} < 0")
        if nu >= pp.e:
            nu, unit = pp.e, 1
        else:
            unit %= pp.m
            if unit % pp.p == 0:
                raise NotAUnit(f"unit {unit} divisible by {pp.p}")
        self.pp = pp
        self.nu = nu
        self.unit = unit

    @classmethod
    def from_int(cls, pp: PrimePower, n: int) -> "ScaledResidue":
        if n == 0:
            return cls(pp, pp.e, 1)
        nu = 0
        while n % pp.p == 0 and nu < pp.e:
            n //= pp.p
            nu += 1
        return cls(pp, nu, n)

    @property
    def is_zero(self) -> bool:
        return self.nu >= self.pp.e

    def value(self) -> int:
        """The represented residue in [0, p^e)."""
        if self.is_zero:
            return 0
        return self.pp.p**self.nu * self.unit % self.pp.m

    def __mul__(self, other):
        pp = self.pp
        if isinstance(other, int):
            other = ScaledResidue.from_int(pp, other)
        if self.is_zero or other.is_zero:
            return ScaledResidue(pp, pp.e, 1)
        return ScaledResidue(pp, self.nu + other.nu, self.unit * other.unit % pp.m)

    __rmul__ = __mul__

    def __add__(self, other):
        pp = self.pp
        if isinstance(other, int):
            other = ScaledResidue.from_int(pp, other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        nu = min(self.nu, other.nu)
        p = pp.p
        s = (self.unit * p ** (self.nu - nu) + other.unit * p ** (other.nu - nu)) % pp.m
        while nu < pp.e and s % p == 0:
            s //= p
            nu += 1
        return ScaledResidue(pp, nu, s if nu < pp.e else 1)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero:
            return self
        return ScaledResidue(self.pp, self.nu, self.pp.m - self.unit)

    def __sub__(self, other):
        if isinstance(other, int):
            other = ScaledResidue.from_int(self.pp, other)
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, ScaledResidue):
            return NotImplemented
        return self.pp == other.pp and self.value() == other.value()

    def __hash__(self):
        return hash((self.pp, self.value()))

    def __repr__(self):
        return f"ScaledResidue(p={self.pp.p}^{self.pp.e}, nu={self.nu}, unit={self.unit})"


def factorial_quotient(numerators, denominators, pp: PrimePower) -> ScaledResidue:
    """prod(n_i!) / prod(d_j!) as a ScaledResidue mod p^e.

    NegativeValuation if the quotient's p-valuation is negative (caller expected
    an integer-valued quotient).
    """
    nu = sum(factorial_nu(n, pp.p) for n in numerators)
    nu -= sum(factorial_nu(d, pp.p) for d in denominators)
    if nu < 0:
        raise NegativeValuation(f"quotient valuation {nu} < 0")
    u = 1
    for n in numerators:
        u = u * factorial_unit(n, pp) % pp.m
    for d in denominators:
        u = u * inv_mod(factorial_unit(d, pp), pp) % pp.m
    return ScaledResidue(pp, nu, u)
