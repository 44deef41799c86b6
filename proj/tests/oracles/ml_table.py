"""Writes tests/data/ml_reference.hpp: frozen mpmath reference values.

Run from tests/oracles:  python3 ml_table.py > ../data/ml_reference.hpp
"""
import mpmath as mp
from mlref import ml


def main():
    print("#pragma once")
    print()
    print("// Generated by tests/oracles/ml_table.py (mpmath, 40 digits). Do not edit.")
    print()
    print("namespace fracopt_test {")
    print()
    print("struct MlReference {")
    print("  double alpha;")
    print("  double beta;")
    print("  double z;")
    print("  double value;")
    print("};")
    print()
    print("inline constexpr MlReference kMlTable[] = {")
    with mp.workdps(40):
        for a in (0.1, 0.25, 0.5, 0.75, 0.9, 0.999):
            for b in (1.0, a, a + 1.0, a + 2.0, 0.5, 1.7):
                for z in (-1e4, -2e3, -150.0, -40.0, -10.0, -3.0, -1.2, -0.5, 0.3, 2.0, 10.0):
                    if z > 0 and abs(z) ** (1.0 / a) > 300:
                        continue
                    v = ml(a, b, z)
                    print(f"    {{{a!r}, {b!r}, {z!r}, {mp.nstr(v, 20)}}},")
    print("};")
    print()
    with mp.workdps(40):
        # Gamma(3.7) as the integral of t^2.7 e^-t over (0, inf)
        g37 = mp.quad(lambda t: t ** mp.mpf("2.7") * mp.exp(-t), [0, 1, 10, mp.inf])
        # kernel 1 / (Gamma(0.25) 0.01^0.75)
        k = 1 / (mp.gamma(mp.mpf("0.25")) * mp.mpf("0.01") ** mp.mpf("0.75"))
        # E_{0.5,1}(-3) by 500 series terms at high precision
        with mp.workdps(80):
            e = mp.fsum(mp.mpf(-3) ** m * mp.rgamma(mp.mpf("0.5") * m + 1) for m in range(500))
    print(f"inline constexpr double kGamma3p7 = {mp.nstr(g37, 20)};")
    print(f"inline constexpr double kKernel0p25At0p01 = {mp.nstr(k, 20)};")
    print(f"inline constexpr double kMlHalfOneMinus3 = {mp.nstr(e, 20)};")
    print()
    print("}  // namespace fracopt_test")


if __name__ == "__main__":
    main()
