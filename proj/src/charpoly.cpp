#include "hcp/charpoly.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hcp {

HIterates::HIterates() {
    table_.push_back(TRat(0));  // h_0
    table_.push_back(TRat(1));  // h_1
}

const TRat& HIterates::h(int s) {
    if (s < 0) throw std::invalid_argument("HIterates: s must be >= 0");
    const TRat t(TPoly::t());
    while (static_cast<int>(table_.size()) <= s) {
        table_.push_back(t / (t - table_.back()));
    }
    return table_[s];
}

TRat h_iterate(int /*k*/, int s) {
    // h_s lives in t = lambda^k; the iteration itself does not depend on k.
    HIterates it;
    return it.h(s);
}

Int mu(int n, int k, int s) {
    if (s < 0 || s > n) throw std::invalid_argument("mu: s out of [0, n]");
    const unsigned long uk = static_cast<unsigned long>(k);
    if (s == n) return int_pow(Int(k), static_cast<unsigned long>(n) * (uk - 2));
    Int head = int_pow(Int(k), static_cast<unsigned long>(s) * (uk - 2));
    Int mid = int_pow(Int(k - 1), uk - 1) - int_pow(Int(k), uk - 2);
    Int tail = int_pow(Int(k - 1), static_cast<unsigned long>(n - s - 1) * (uk - 1));
    return head * mid * tail;
}

std::vector<Int> mu_row(int n, int k) {
    std::vector<Int> out;
    out.reserve(n + 1);
    for (int s = 0; s <= n; ++s) out.push_back(mu(n, k, s));
    return out;
}

FactoredCharPoly charpoly_single_edge(int k) {
    if (k < 2) throw std::invalid_argument("charpoly_single_edge: k must be >= 2");
    const unsigned long uk = static_cast<unsigned long>(k);
    FactoredCharPoly f(k);
    f.mul_lambda_power(Int(k) * int_pow(Int(k - 1), uk - 1) - int_pow(Int(k), uk - 1));
    f.mul_tpoly(TPoly::t() - TPoly(Int(1)), int_pow(Int(k), uk - 2));
    f.finalize();
    return f;
}

FactoredCharPoly charpoly_path(int n, int k) {
    if (n < 1) throw std::invalid_argument("charpoly_path: n must be >= 1");
    if (k < 2) throw std::invalid_argument("charpoly_path: k must be >= 2");
    const unsigned long uk = static_cast<unsigned long>(k);
    HIterates hs;
    const TRat t(TPoly::t());
    FactoredCharPoly acc = charpoly_single_edge(k);
    for (int m = 2; m <= n; ++m) {
        FactoredCharPoly next(k);
        next.mul_lambda_power(Int(k - 2) *
                              int_pow(Int(k - 1), static_cast<unsigned long>(m) * (uk - 1)));
        for (int s = 0; s <= m; ++s) {
            next.mul_factor(t - hs.h(s), mu(m, k, s), Int(-(k - 1)));
        }
        next.mul(acc, int_pow(Int(k - 1), uk - 1));
        next.finalize();
        acc = std::move(next);
    }
    return acc;
}

FactoredCharPoly charpoly_star(int m, int k) {
    if (m < 1) throw std::invalid_argument("charpoly_star: m must be >= 1");
    if (k < 2) throw std::invalid_argument("charpoly_star: k must be >= 2");
    const unsigned long uk = static_cast<unsigned long>(k);
    const unsigned long r = static_cast<unsigned long>(m) * (uk - 1);
    FactoredCharPoly f(k);
    f.mul_lambda_power(Int(r) * int_pow(Int(k - 1), r));
    const Int base = int_pow(Int(k - 1), uk - 1) - int_pow(Int(k), uk - 2);
    for (int p = 0; p <= m; ++p) {
        Int e = binomial(m, p) * int_pow(Int(k), (uk - 2) * static_cast<unsigned long>(p)) *
                int_pow(base, static_cast<unsigned long>(m - p));
        if (e == 0) continue;
        f.mul_factor(TRat(TPoly::t() - TPoly(Int(p))), e, Int(-(k - 1)));
    }
    f.finalize();
    return f;
}

namespace {

// Multisets of size `count` over s-values 0..n, as occurrence vectors.
void enumerate_multisets(int n, int count, std::vector<int>& occ, int from,
                         const std::function<void(const std::vector<int>&)>& emit) {
    if (count == 0) {
        emit(occ);
        return;
    }
    for (int s = from; s <= n; ++s) {
        occ[s] += 1;
        enumerate_multisets(n, count - 1, occ, s, emit);
        occ[s] -= 1;
    }
}

struct GroupChoice {
    TRat h_sum;   // sum of h_{s_i} over the group's arms
    Int weight;   // arrangements * product of mu values
};

}  // namespace

FactoredCharPoly charpoly_starlike(int k, const std::vector<int>& arm_lengths) {
    if (arm_lengths.empty()) throw std::invalid_argument("charpoly_starlike: no arms");
    if (k < 2) throw std::invalid_argument("charpoly_starlike: k must be >= 2");
    for (int n : arm_lengths) {
        if (n < 1) throw std::invalid_argument("charpoly_starlike: arm lengths must be >= 1");
    }
    const unsigned long uk = static_cast<unsigned long>(k);
    const int m = static_cast<int>(arm_lengths.size());
    const int ones = static_cast<int>(std::count(arm_lengths.begin(), arm_lengths.end(), 1));
    Int sum_r = 0;
    for (int n : arm_lengths) sum_r += Int(n) * (k - 1);

    FactoredCharPoly f(k);
    f.mul_lambda_power(Int(m * (k - 2) + ones) *
                       int_pow(Int(k - 1), to_ulong_checked(sum_r, "starlike")));

    for (int i = 0; i < m; ++i) {
        if (arm_lengths[i] <= 1) continue;
        Int exp_r = sum_r - Int(arm_lengths[i]) * (k - 1);
        Int e = int_pow(Int(k - 1), uk - 1 + to_ulong_checked(exp_r, "starlike"));
        f.mul(charpoly_path(arm_lengths[i] - 1, k), e);
    }

    // Group arms by length; within a group the factor depends only on the
    // multiset of s-values, with multinomial arrangement counts.
    std::map<int, int> groups;  // arm length -> arm count
    for (int n : arm_lengths) groups[n] += 1;

    HIterates hs;
    std::vector<std::vector<GroupChoice>> per_group;
    for (const auto& [n, count] : groups) {
        std::vector<GroupChoice> choices;
        std::vector<int> occ(n + 1, 0);
        enumerate_multisets(n, count, occ, 0, [&](const std::vector<int>& o) {
            GroupChoice gc{TRat(0), factorial(count)};
            for (int s = 0; s <= n; ++s) {
                if (o[s] == 0) continue;
                gc.weight /= factorial(o[s]);
                gc.weight *= int_pow(mu(n, k, s), static_cast<unsigned long>(o[s]));
                for (int rep = 0; rep < o[s]; ++rep) gc.h_sum = gc.h_sum + hs.h(s);
            }
            choices.push_back(std::move(gc));
        });
        per_group.push_back(std::move(choices));
    }

    const TRat t(TPoly::t());
    std::vector<size_t> pick(per_group.size(), 0);
    for (;;) {
        TRat h_sum(0);
        Int weight = 1;
        for (size_t g = 0; g < per_group.size(); ++g) {
            h_sum = h_sum + per_group[g][pick[g]].h_sum;
            weight *= per_group[g][pick[g]].weight;
        }
        if (weight != 0) f.mul_factor(t - h_sum, weight, Int(-(k - 1)));
        size_t g = 0;
        while (g < pick.size() && ++pick[g] == per_group[g].size()) {
            pick[g] = 0;
            ++g;
        }
        if (g == pick.size()) break;
    }

    f.finalize();
    return f;
}

Int resultant_degree(int num_vertices, int k) {
    return Int(num_vertices) *
           int_pow(Int(k - 1), static_cast<unsigned long>(num_vertices - 1));
}

RootCheckReport power_hypergraph_root_check(const FactoredCharPoly& f, int n, double tol) {
    RootCheckReport rep;
    // Candidate values: squares of simple-path eigenvalues 2cos(j*pi/(m+1)),
    // paths on m <= n+1 vertices (subpaths included).
    std::vector<double> candidates;
    for (int m = 1; m <= n + 1; ++m) {
        for (int j = 1; j <= m; ++j) {
            double mu_val = 2.0 * std::cos(j * M_PI / (m + 1));
            candidates.push_back(mu_val * mu_val);
        }
    }
    for (const auto& [poly, e] : f.factors()) {
        const int d = poly.degree();
        // Companion matrix of the monic rational normalization.
        Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
        double lead = poly.leading().get_d();
        for (int i = 0; i < d; ++i) {
            companion(i, d - 1) = -poly.coeff(i).get_d() / lead;
            if (i + 1 < d) companion(i + 1, i) = 1.0;
        }
        Eigen::VectorXcd roots = companion.eigenvalues();
        for (int i = 0; i < roots.size(); ++i) {
            rep.roots_checked += 1;
            std::complex<double> tau = roots(i);
            bool matched = false;
            for (double cand : candidates) {
                if (std::abs(tau - std::complex<double>(cand, 0.0)) <= tol) {
                    matched = true;
                    break;
                }
            }
            if (!matched) {
                std::ostringstream os;
                os << "root " << tau.real();
                if (std::abs(tau.imag()) > tol) os << "+" << tau.imag() << "i";
                os << " of factor " << poly.to_string();
                rep.unmatched.push_back(os.str());
            }
        }
    }
    rep.all_matched = rep.unmatched.empty();
    return rep;
}

}  // namespace hcp
