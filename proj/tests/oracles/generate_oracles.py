#!/usr/bin/env python3
"""Regenerates oracle_values.hpp with mpmath.

Reference values come from the xgamma definition only: the ratio density is
the integral of y f_X(zy) f_Y(y) over y, the survival is the integral of
f_Y(y) P(X > zy). Nothing here uses the closed forms under test.

    python3 generate_oracles.py > oracle_values.hpp
"""
from mpmath import mp, mpf, quad, exp, log, inf, findroot, gamma

mp.dps = 30


def xg_pdf(t, th):
    return th**2 / (1 + th) * (1 + th / 2 * t**2) * exp(-th * t)


def xg_sf(t, th):
    return (1 + th + th * t + th**2 * t**2 / 2) * exp(-th * t) / (1 + th)


def z_pdf(z, a, b):
    return quad(lambda y: y * xg_pdf(z * y, a) * xg_pdf(y, b), [0, 1, 10, inf])


def z_sf(z, a, b):
    return quad(lambda y: xg_pdf(y, b) * xg_sf(z * y, a), [0, 1, 10, inf])


# E[X^k] from the gamma-mixture form of the xgamma law. Quadrature of
# t^k near 0 loses digits once k < -1/2.
def xg_moment(th, k):
    return th**2 / (1 + th) * (gamma(k + 1) / th ** (k + 1) + th / 2 * gamma(k + 3) / th ** (k + 3))


def z_moment(a, b, k):
    return xg_moment(a, k) * xg_moment(b, -k)


# Closed-form density used only where nested quadrature would be too slow
# (entropy integrals). It is checked against z_pdf below before use.
def quantile(a, b, q):
    g = lambda z: (1 - z_sf(z, a, b)) - q
    lo, hi = mpf(1), mpf(1)
    while g(lo) > 0:
        lo /= 4
    while g(hi) < 0:
        hi *= 4
    return findroot(g, (lo, hi), solver="anderson")


def z_pdf_closed(z, a, b):
    K = a**2 * b**2 / ((1 + a) * (1 + b))
    d = a * z + b
    return K * (1 / d**2 + 3 * a * z**2 / d**4 + 3 * b / d**4 + 30 * a * b * z**2 / d**6)


def fmt(x):
    return mp.nstr(x, 20, min_fixed=-inf, max_fixed=inf) if x != 0 else "0.0"


def main():
    pairs = [(1, 1), (mpf("0.8"), mpf("1.3")), (2, mpf("0.5")), (mpf("0.3"), 5)]
    zs = [0, mpf("0.1"), 1, 2, 10]
    for a, b in pairs:
        for z in [mpf("0.1"), 1, 10]:
            assert abs(z_pdf(z, a, b) / z_pdf_closed(z, a, b) - 1) < mpf("1e-15")

    for th in [mpf("0.3"), 1, 5]:
        q = quad(lambda t: t ** mpf("0.5") * xg_pdf(t, th), [0, 1, 10, inf])
        assert abs(q / xg_moment(th, mpf("0.5")) - 1) < mpf("1e-15")

    out = []
    out.append("// Generated by generate_oracles.py (mpmath, 30 digits). Do not edit.")
    out.append("#pragma once\n")
    out.append("namespace oracle {\n")
    out.append("struct PointValue {\n  double alpha;\n  double beta;\n  double z;\n  double value;\n};\n")

    out.append("inline constexpr PointValue kPdf[] = {")
    for a, b in pairs:
        for z in zs:
            out.append(f"    {{{fmt(a)}, {fmt(b)}, {fmt(z)}, {fmt(z_pdf(z, a, b))}}},")
    out.append("};\n")

    out.append("inline constexpr PointValue kSurvival[] = {")
    for a, b in pairs:
        for z in [mpf("0.1"), 1, 2, 10, 50]:
            out.append(f"    {{{fmt(a)}, {fmt(b)}, {fmt(z)}, {fmt(z_sf(z, a, b))}}},")
    out.append("};\n")

    out.append("// z holds the moment order k.")
    out.append("inline constexpr PointValue kMoment[] = {")
    for a, b in pairs:
        for k in [mpf("-0.75"), mpf("-0.5"), mpf("-0.25"), mpf("0.25"), mpf("0.5"), mpf("0.75")]:
            out.append(f"    {{{fmt(a)}, {fmt(b)}, {fmt(k)}, {fmt(z_moment(a, b, k))}}},")
    out.append("};\n")

    out.append("// z holds the probability.")
    out.append("inline constexpr PointValue kQuantile[] = {")
    for a, b in pairs:
        for q in [mpf("0.01"), mpf("0.1"), mpf("0.5"), mpf("0.9"), mpf("0.99")]:
            root = quantile(a, b, q)
            out.append(f"    {{{fmt(a)}, {fmt(b)}, {fmt(q)}, {fmt(root)}}},")
    out.append("};\n")

    def shannon(a, b):
        f = lambda z: z_pdf_closed(z, a, b)
        return -quad(lambda z: f(z) * log(f(z)), [0, 1, 10, 100, inf])

    out.append("inline constexpr PointValue kShannon[] = {")
    for a, b in pairs:
        out.append(f"    {{{fmt(a)}, {fmt(b)}, 0.0, {fmt(shannon(a, b))}}},")
    out.append("};\n")

    def renyi(a, b, g):
        f = lambda z: z_pdf_closed(z, a, b)
        return log(quad(lambda z: f(z) ** g, [0, 1, 10, 100, inf])) / (1 - g)

    out.append("// z holds the order.")
    out.append("inline constexpr PointValue kRenyi[] = {")
    for a, b in [(1, 1), (mpf("0.8"), mpf("1.3"))]:
        for g in [mpf("0.75"), 2, 3]:
            out.append(f"    {{{fmt(a)}, {fmt(b)}, {fmt(g)}, {fmt(renyi(a, b, g))}}},")
    out.append("};\n")

    # Incomplete moment I_k(z) = E[Z^k 1{Z <= z}].
    def incomplete(a, b, k, z):
        return quad(lambda y: y * xg_pdf(y, b) * quad(lambda s: s**k * xg_pdf(s * y, a), [0, z]), [0, 1, 10, inf])

    a, b = mpf("0.8"), mpf("1.3")
    k, z = mpf("0.25"), mpf(2)
    ik = incomplete(a, b, k, z)
    out.append(f"inline constexpr double kIncompleteA08B13K025Z2 = {fmt(ik)};")
    out.append(f"inline constexpr double kGofZA08B13K025Z2 = {fmt(ik / z_pdf(z, a, b))};")
    ik11 = incomplete(1, 1, mpf("0.5"), 1)
    out.append(f"inline constexpr double kIncompleteA1B1K05Z1 = {fmt(ik11)};")
    out.append("")

    out.append("}  // namespace oracle")
    print("\n".join(out))


if __name__ == "__main__":
    main()
