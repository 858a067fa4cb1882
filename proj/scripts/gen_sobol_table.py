#!/usr/bin/env python3
"""Regenerate core/src/sobol_joe_kuo_table.cpp.

Emits the Joe & Kuo (2008) primitive polynomials and initial direction
numbers (the D(6) table, 21201 dimensions) as C++ arrays.  The data is read
from scipy's bundled copy of the same table, so regenerating requires scipy.

Usage: python3 scripts/gen_sobol_table.py > core/src/sobol_joe_kuo_table.cpp
"""
import sys

import numpy as np
import scipy.stats._sobol as _sobol


def main() -> None:
    poly = _sobol.get_poly_vinit("poly", np.uint32)
    vinit = _sobol.get_poly_vinit("vinit", np.uint64)
    n = poly.shape[0]
    assert n == 21201

    # Dimension 1 (index 0) is the degenerate first column; the library
    # special-cases it, so the table stores dimensions 2..21201.
    degrees = [int(poly[j]).bit_length() - 1 for j in range(1, n)]
    m_flat = []
    for j in range(1, n):
        s = degrees[j - 1]
        row = vinit[j, :s]
        assert row.min() >= 1
        m_flat.extend(int(x) for x in row)

    out = sys.stdout
    out.write("// Joe & Kuo (2008) sobol direction-number table, D(6) criteria,\n")
    out.write("// 21201 dimensions.  Generated by scripts/gen_sobol_table.py;\n")
    out.write("// do not edit by hand.\n\n")
    out.write("#include <cstdint>\n\n")
    out.write("namespace vmge::detail {\n\n")
    out.write(f"const std::uint32_t kSobolTableDims = {n};\n\n")

    def emit(name, ctype, values, per_line=20):
        out.write(f"extern const {ctype} {name}[];\n")
        out.write(f"const {ctype} {name}[] = {{\n")
        for i in range(0, len(values), per_line):
            out.write("  " + ",".join(str(v) for v in values[i:i + per_line]) + ",\n")
        out.write("};\n\n")

    # Polynomials are stored with leading and trailing bits included, e.g.
    # x^3 + x + 1 -> 0b1011.
    emit("kSobolPoly", "std::uint32_t", [int(poly[j]) for j in range(1, n)])
    emit("kSobolMInitial", "std::uint32_t", m_flat)
    out.write("}  // namespace vmge::detail\n")


if __name__ == "__main__":
    main()
