#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hcp/factored_poly.hpp"
#include "hcp/mpoly.hpp"

namespace hcp {

/// det(M') = 0 under every tried variable ordering and no decoupled split applies.
struct DegenerateMinorError : std::runtime_error {
    explicit DegenerateMinorError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact determinant by fraction-free Bareiss elimination with row pivoting.
/// The parallel kernel distributes the row updates over OpenMP threads; the
/// _serial variant is the reference implementation.
Int bareiss_determinant(std::vector<std::vector<Int>> m);
Int bareiss_determinant_serial(std::vector<std::vector<Int>> m);

/// Rational determinant: rows are scaled integral, Bareiss, then rescale.
Rat determinant(const std::vector<std::vector<Rat>>& m, bool parallel = true);

/// The classical square Macaulay matrix of a homogeneous system, plus the
/// index data needed for the quotient formula Res = det(M)/det(M').
struct MacaulayInstance {
    int nvars = 0;
    std::vector<int> degrees;
    int total_degree = 0;                    // D = sum(d_i - 1) + 1
    std::vector<std::vector<int>> columns;   // degree-D monomials, fixed order
    std::vector<int> row_poly;               // row i is a shift of polys[row_poly[i]]
    std::vector<std::vector<Rat>> matrix;    // square, size = columns.size()
    std::vector<int> minor_indices;          // rows/cols of the reduced minor M'
};

/// Number of degree-D monomials in `nvars` variables (the matrix dimension).
Int macaulay_size(int nvars, int total_degree);

MacaulayInstance build_macaulay(const std::vector<MPoly>& polys, int nvars);

/// Exact resultant of n homogeneous polynomials in n variables with rational
/// coefficients. Degenerate minors are retried under permuted variable
/// orderings; block-decoupled systems fall back to the product rule. Throws
/// DegenerateMinorError when no route applies.
Rat macaulay_resultant(const std::vector<MPoly>& polys, int nvars);

inline constexpr long kMacaulayColumnGuard = 2500;

/// Resultant of the eigenvalue system of H at a fixed rational lambda. Falls
/// back to exact Lagrange interpolation through generic lambda samples when
/// the quotient is degenerate at lambda0.
Rat charpoly_eval_oracle(const UniformHypergraph& h, const Rat& lambda0);

struct VerifyReport {
    struct Item {
        Rat lambda0;
        Rat formula_value;
        Rat oracle_value;
        bool equal = false;
    };
    std::vector<Item> items;
    bool all_equal = false;
};

/// Closed form vs oracle at each sample point, exact comparison.
VerifyReport verify_formula(const UniformHypergraph& h, const FactoredCharPoly& f,
                            const std::vector<Rat>& lambdas);

}  // namespace hcp
