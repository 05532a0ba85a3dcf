#!/usr/bin/env python3
"""Regenerates bounds_golden.tsv for d in 2..100.

Written independently of the Rust code. Hadamard existence uses the same
closure as the catalog: powers of two, Paley I (q = n-1 prime, q = 3 mod 4),
Paley II (q = n/2-1 prime, q = 1 mod 4) and Kronecker products of those.
"""
import math
from functools import lru_cache


def is_prime(n):
    return n >= 2 and all(n % p for p in range(2, math.isqrt(n) + 1))


@lru_cache(maxsize=None)
def hm(n):
    if n in (1, 2):
        return True
    if n % 4:
        return False
    if n & (n - 1) == 0:
        return True
    if is_prime(n - 1) and (n - 1) % 4 == 3:
        return True
    q = n // 2 - 1
    if is_prime(q) and q % 4 == 1:
        return True
    return any(n % a == 0 and hm(a) and hm(n // a) for a in range(2, math.isqrt(n) + 1))


def odd_part(n):
    i = 0
    while n % 2 == 0:
        n //= 2
        i += 1
    return i, n


def row(d):
    if d % 4:
        if d == 2:
            return "not_divisible_by4", 2, 2
        return "not_divisible_by4", 1, 1
    n = d // 4
    r = math.isqrt(n)
    if r * r != n:
        return "div4_non_square", 2 if hm(d) else 1, 2
    i, s = odd_part(r)
    # d = 4 * r^2 = 4^(i+1) * s^2
    if s == 1:
        return "power_of_four", d // 2 + 1, d // 2 + 1
    if i == 0:
        return "four_odd_square", 2 if hm(d) else 1, 3
    raise ValueError(f"d={d} is outside the generated range")


def main():
    print("d\tclass\tlower\tupper\texact")
    for d in range(2, 101):
        kind, lo, up = row(d)
        exact = str(lo) if lo == up else "-"
        print(f"{d}\t{kind}\t{lo}\t{up}\t{exact}")


if __name__ == "__main__":
    main()
