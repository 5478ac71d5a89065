"""Pure-Python common-zero scan over F_p^3 (fallback for the compiled kernel)."""

from __future__ import annotations


def _by_r_degree(terms, prime):
    """Group terms c*p^i*q^j*r^k by k."""
    deg = max((k for _, _, k, _ in terms), default=0)
    groups = [[] for _ in range(deg + 1)]
    for i, j, k, c in terms:
        groups[k].append((i, j, c % prime))
    return groups


def common_zeros(polys, prime):
    """All (p, q, r) in F_prime^3 where every polynomial vanishes, in lex order.

    ``polys`` is a list of term lists ``[(i, j, k, c), ...]`` meaning
    ``sum c * p**i * q**j * r**k``.
    """
    if not polys:
        return [(p, q, r) for p in range(prime) for q in range(prime) for r in range(prime)]
    grouped = [_by_r_degree(t, prime) for t in polys]
    maxdeg = max(max((i for i, _, _, _ in t), default=0) for t in polys)
    maxdeg = max(maxdeg, max(max((j for _, j, _, _ in t), default=0) for t in polys))
    maxdeg = max(maxdeg, max(len(g) for g in grouped))
    pw = [[pow(v, e, prime) for e in range(maxdeg + 1)] for v in range(prime)]
    out = []
    for p in range(prime):
        pp = pw[p]
        for q in range(prime):
            qq = pw[q]
            # univariate coefficients in r, highest degree first (for Horner)
            uni = []
            for groups in grouped:
                coeffs = [sum(c * pp[i] * qq[j] for i, j, c in g) % prime for g in groups]
                uni.append(coeffs[::-1])
            for r in range(prime):
                for coeffs in uni:
                    acc = 0
                    for c in coeffs:
                        acc = (acc * r + c) % prime
                    if acc:
                        break
                else:
                    out.append((p, q, r))
    return out
