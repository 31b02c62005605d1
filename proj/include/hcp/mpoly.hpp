#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hcp/bigint.hpp"
#include "hcp/hypergraph.hpp"

namespace hcp {

/// Coefficient of one monomial: c0 + c1*lambda. Every polynomial this engine
/// builds is at most linear in lambda, so the pair is enough to carry the
/// symbolic marker through substitutions.
struct LamCoef {
    Rat c0 = 0;
    Rat c1 = 0;
    bool is_zero() const { return c0 == 0 && c1 == 0; }
    bool is_numeric() const { return c1 == 0; }
    bool operator==(const LamCoef&) const = default;
};

/// Sparse multivariate polynomial: exponent vector (fixed variable count) -> LamCoef.
class MPoly {
  public:
    explicit MPoly(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    const std::map<std::vector<int>, LamCoef>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<int>& mono, const LamCoef& c);

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    /// Multiply by the monomial x^shift.
    MPoly shifted(const std::vector<int>& shift) const;

    int total_degree() const;  // -1 for the zero polynomial
    bool is_homogeneous() const;

    MPoly substitute_lambda(const Rat& lambda0) const;
    /// x_v := value with value in {0, 1}.
    MPoly substitute_var(int v, int value) const;
    MPoly permuted_vars(const std::vector<int>& perm) const;

    std::string to_string(const std::string& varname = "x") const;

  private:
    int nvars_;
    std::map<std::vector<int>, LamCoef> terms_;
};

/// One polynomial per vertex: F_v = lambda*x_v^{k-1} - sum over incident edges
/// of the opposite monomials. lambda stays symbolic unless lambda_value is set.
struct EigenSystem {
    std::vector<int> variables;  // vertex ids in variable order
    std::vector<MPoly> polys;    // polys[i] belongs to variables[i]
    std::optional<Rat> lambda_value;
};

EigenSystem eigen_system(const UniformHypergraph& h,
                         const std::optional<Rat>& lambda_value = std::nullopt);

/// f_w, {f_v : v != w} (x_w := 1) and {Fbar_v : v != w} (x_w := 0); polynomials
/// stay indexed over all vertex variables with the w-exponent zeroed out.
struct PoissonSplit {
    int w;
    MPoly f_w;
    std::vector<int> remaining;  // vertex ids != w, ascending
    std::vector<MPoly> f;        // aligned with `remaining`
    std::vector<MPoly> f_bar;    // aligned with `remaining`
};

PoissonSplit poisson_split(const UniformHypergraph& h, int w,
                           const std::optional<Rat>& lambda_value = std::nullopt);

}  // namespace hcp
