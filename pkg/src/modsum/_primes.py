"""Prime selection and validation for the rolling-hash engine.

The default prime keeps every intermediate product of the hash arithmetic
inside a signed 64-bit word (p**2 < 2**63), which is what the compiled
kernels require.  When the modulus is large enough that the collision
bound at that prime would be weak, the engine switches to arbitrary
precision arithmetic over a Mersenne prime instead.
"""
from __future__ import annotations

from .errors import InvalidParameterError, WeakPrimeError

# Largest prime usable by the int64 kernels: p*p must stay below 2**63.
INT64_SAFE_LIMIT = 3_037_000_499

# Default hash prime for moduli up to DEFAULT_PRIME_MAX_MODULUS.
DEFAULT_PRIME = 1_234_567_891
DEFAULT_PRIME_MAX_MODULUS = 1 << 20

# Known Mersenne primes large enough for any modulus this package accepts.
_MERSENNE_EXPONENTS = (89, 107, 127)
MERSENNE_PRIMES = tuple((1 << e) - 1 for e in _MERSENNE_EXPONENTS)

MAX_MODULUS = 1 << 40

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Miller-Rabin with a fixed base set.

    Deterministic (proven) for every n below 3.3 * 10**24, which covers
    all 64-bit inputs; beyond that a 'True' is only a strong-probable-prime
    verdict, while 'False' is always a proof of compositeness.
    """
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def ceil_log2(n: int) -> int:
    if n < 1:
        raise InvalidParameterError("ceil_log2 needs n >= 1, got %r" % (n,))
    return (n - 1).bit_length()


def validate_hash_prime(p: int, m: int) -> None:
    """Reject primes the hash engine cannot use for modulus m."""
    if p <= 2 * m:
        raise WeakPrimeError("prime %d is not above 2*m = %d" % (p, 2 * m))
    if not is_prime(p):
        raise InvalidParameterError("%d is composite" % (p,))


def prime_for_modulus(m: int) -> int:
    """Hash prime policy for a subset-sum modulus.

    Up to 2**20 the fixed default keeps the error probability per solve
    below about 4e-4 while staying int64-safe.  Above that, pick the
    smallest stocked Mersenne prime that pushes the collision probability
    under 1/m, i.e. the first one at or above m**3 * ceil_log2(m).
    """
    if m < 1:
        raise InvalidParameterError("modulus must be >= 1, got %r" % (m,))
    if m <= DEFAULT_PRIME_MAX_MODULUS:
        return DEFAULT_PRIME
    if m > MAX_MODULUS:
        raise InvalidParameterError(
            "modulus %d exceeds the supported ceiling 2**40" % (m,))
    need = m * m * m * ceil_log2(m)
    for p in MERSENNE_PRIMES:
        if p >= need:
            return p
    raise InvalidParameterError(
        "no stocked prime reaches %d (modulus %d)" % (need, m))


def prime_for_vertices(n: int) -> int:
    """Hash prime policy for an n-vertex path instance.

    The reachability trees hash subsets of [0, n), so the same default
    is fine up to n = 2**13; larger instances move to a Mersenne prime
    at or above n**3 * ceil_log2(n).
    """
    if n < 1:
        raise InvalidParameterError("vertex count must be >= 1, got %r" % (n,))
    if n <= (1 << 13):
        return DEFAULT_PRIME
    need = n * n * n * ceil_log2(n)
    for p in MERSENNE_PRIMES:
        if p >= need:
            return p
    raise InvalidParameterError(
        "no stocked prime reaches %d (%d vertices)" % (need, n))
