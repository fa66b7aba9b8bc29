"""Small exact-integer helpers shared across the package.

All logarithm-like quantities are clamped to be >= 1 so that degenerate inputs
(size-1 trees, s=1 stars) stay well defined.
"""

import math


def clog2(n: int) -> int:
    """max(1, ceil(log2 n)); defined as 1 for n <= 2."""
    if n <= 2:
        return 1
    return (n - 1).bit_length()


def ilog2(n: int) -> int:
    """floor(log2 n) for n >= 1."""
    if n < 1:
        raise ValueError("ilog2 of non-positive value")
    return n.bit_length() - 1


def iter_log(n: int, j: int) -> int:
    """j-fold clamped log: clog2 applied j times."""
    v = n
    for _ in range(j):
        v = clog2(v)
    return v


def log_star(n: int) -> int:
    """Number of clog2 applications needed to reach 1."""
    count = 0
    v = n
    while v > 1:
        v = clog2(v)
        count += 1
    return max(1, count)


def iroot_floor(n: int, k: int) -> int:
    """floor(n ** (1/k)) exactly, n >= 0, k >= 1."""
    if n < 0:
        raise ValueError("negative radicand")
    if k == 1 or n in (0, 1):
        return n
    if k == 2:
        return math.isqrt(n)
    r = int(round(n ** (1.0 / k)))
    while r > 0 and r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def iroot_ceil(n: int, k: int) -> int:
    r = iroot_floor(n, k)
    return r if r**k == n else r + 1


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def floor_sqrt_frac(num: int, den: int) -> int:
    """floor(sqrt(num/den)) for num >= 0, den > 0, exactly."""
    if num < 0 or den <= 0:
        raise ValueError("invalid fraction under sqrt")
    return math.isqrt(num * den) // den
