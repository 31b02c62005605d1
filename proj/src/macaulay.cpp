#include "hcp/macaulay.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace hcp {

namespace {

int bareiss_eliminate(std::vector<std::vector<Int>>& m, bool parallel) {
    const int n = static_cast<int>(m.size());
    int sign = 1;
    Int prev = 1;
    for (int step = 0; step < n - 1; ++step) {
        int pivot_row = -1;
        for (int i = step; i < n; ++i) {
            if (m[i][step] != 0) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row < 0) return 0;  // singular
        if (pivot_row != step) {
            std::swap(m[pivot_row], m[step]);
            sign = -sign;
        }
        const Int& pivot = m[step][step];
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (int i = step + 1; i < n; ++i) {
            if (m[i][step] == 0) {
                if (prev != 1) {
                    for (int j = step + 1; j < n; ++j) {
                        if (m[i][j] != 0) {
                            m[i][j] *= pivot;
                            mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(),
                                         prev.get_mpz_t());
                        }
                    }
                } else {
                    for (int j = step + 1; j < n; ++j) {
                        if (m[i][j] != 0) m[i][j] *= pivot;
                    }
                }
            } else {
                for (int j = step + 1; j < n; ++j) {
                    m[i][j] = m[i][j] * pivot - m[i][step] * m[step][j];
                    if (prev != 1 && m[i][j] != 0) {
                        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
                    }
                }
                m[i][step] = 0;
            }
        }
        prev = pivot;
    }
    return sign;
}

Int bareiss_impl(std::vector<std::vector<Int>> m, bool parallel) {
    if (m.empty()) return Int(1);  // empty determinant
    const int n = static_cast<int>(m.size());
    for (const auto& row : m) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("bareiss: matrix not square");
    }
    int sign = bareiss_eliminate(m, parallel);
    if (sign == 0) return Int(0);
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

Int bareiss_determinant(std::vector<std::vector<Int>> m) { return bareiss_impl(std::move(m), true); }

Int bareiss_determinant_serial(std::vector<std::vector<Int>> m) {
    return bareiss_impl(std::move(m), false);
}

Rat determinant(const std::vector<std::vector<Rat>>& m, bool parallel) {
    const size_t n = m.size();
    std::vector<std::vector<Int>> scaled(n, std::vector<Int>(n));
    Rat scale = 1;
    for (size_t i = 0; i < n; ++i) {
        Int l = 1;
        for (const Rat& v : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        for (size_t j = 0; j < n; ++j) {
            Rat v = m[i][j] * Rat(l);
            scaled[i][j] = v.get_num();  // denominator is 1 by construction
        }
        scale *= Rat(l);
    }
    Int d = bareiss_impl(std::move(scaled), parallel);
    return Rat(d) / scale;
}

Int macaulay_size(int nvars, int total_degree) {
    return binomial(total_degree + nvars - 1, nvars - 1);
}

namespace {

void gen_monomials(int nvars, int degree, std::vector<int>& current, int pos,
                   std::vector<std::vector<int>>& out) {
    if (pos == nvars - 1) {
        current[pos] = degree;
        out.push_back(current);
        return;
    }
    for (int e = degree; e >= 0; --e) {
        current[pos] = e;
        gen_monomials(nvars, degree - e, current, pos + 1, out);
    }
}

}  // namespace

MacaulayInstance build_macaulay(const std::vector<MPoly>& polys, int nvars) {
    const int n = static_cast<int>(polys.size());
    if (n != nvars) throw std::invalid_argument("build_macaulay: need n polynomials in n variables");
    MacaulayInstance inst;
    inst.nvars = nvars;
    for (const auto& p : polys) {
        if (p.is_zero() || !p.is_homogeneous())
            throw std::invalid_argument("build_macaulay: polynomials must be nonzero homogeneous");
        for (const auto& [mono, c] : p.terms()) {
            if (!c.is_numeric())
                throw std::invalid_argument("build_macaulay: lambda must be substituted first");
        }
        int d = p.total_degree();
        if (d < 1) throw std::invalid_argument("build_macaulay: degrees must be >= 1");
        inst.degrees.push_back(d);
        inst.total_degree += d - 1;
    }
    inst.total_degree += 1;

    Int cols = macaulay_size(nvars, inst.total_degree);
    if (cols > kMacaulayColumnGuard) {
        throw std::length_error("build_macaulay: matrix of " + cols.get_str() +
                                " columns exceeds the guard of " +
                                std::to_string(kMacaulayColumnGuard));
    }

    std::vector<int> current(nvars, 0);
    gen_monomials(nvars, inst.total_degree, current, 0, inst.columns);
    std::map<std::vector<int>, int> col_index;
    for (size_t i = 0; i < inst.columns.size(); ++i) col_index.emplace(inst.columns[i], i);

    const size_t dim = inst.columns.size();
    inst.matrix.assign(dim, std::vector<Rat>(dim, Rat(0)));
    inst.row_poly.resize(dim);

    for (size_t row = 0; row < dim; ++row) {
        const std::vector<int>& alpha = inst.columns[row];
        int assigned = -1;
        int divisible_count = 0;
        for (int i = 0; i < nvars; ++i) {
            if (alpha[i] >= inst.degrees[i]) {
                divisible_count += 1;
                if (assigned < 0) assigned = i;
            }
        }
        inst.row_poly[row] = assigned;  // pigeonhole guarantees assigned >= 0
        if (divisible_count >= 2) inst.minor_indices.push_back(static_cast<int>(row));
        std::vector<int> shift(alpha);
        shift[assigned] -= inst.degrees[assigned];
        for (const auto& [mono, coef] : polys[assigned].terms()) {
            std::vector<int> target(mono);
            for (int i = 0; i < nvars; ++i) target[i] += shift[i];
            inst.matrix[row][col_index.at(target)] += coef.c0;
        }
    }
    return inst;
}

namespace {

struct QuotientResult {
    bool ok = false;
    Rat value;
};

QuotientResult try_quotient(const std::vector<MPoly>& polys, int nvars) {
    MacaulayInstance inst = build_macaulay(polys, nvars);
    const auto& idx = inst.minor_indices;
    std::vector<std::vector<Rat>> minor(idx.size(), std::vector<Rat>(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i) {
        for (size_t j = 0; j < idx.size(); ++j) minor[i][j] = inst.matrix[idx[i]][idx[j]];
    }
    Rat det_minor = determinant(minor);
    if (det_minor == 0) return {};
    Rat det_full = determinant(inst.matrix);
    return {true, det_full / det_minor};
}

bool permutation_sign_negative(const std::vector<int>& perm) {
    int inversions = 0;
    for (size_t i = 0; i < perm.size(); ++i) {
        for (size_t j = i + 1; j < perm.size(); ++j) {
            if (perm[i] > perm[j]) ++inversions;
        }
    }
    return (inversions % 2) != 0;
}

bool degree_product_odd(const std::vector<MPoly>& polys) {
    for (const auto& p : polys) {
        if (p.total_degree() % 2 == 0) return false;
    }
    return true;
}

// Connected components of the variable-sharing structure; each polynomial must
// use variables of a single component for the split to apply.
struct BlockSplit {
    bool ok = false;
    std::vector<std::vector<int>> var_blocks;   // variable ids per block
    std::vector<std::vector<int>> poly_blocks;  // poly ids per block
};

BlockSplit find_blocks(const std::vector<MPoly>& polys, int nvars) {
    std::vector<int> parent(nvars);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::vector<char>> uses(polys.size(), std::vector<char>(nvars, 0));
    for (size_t p = 0; p < polys.size(); ++p) {
        int anchor = -1;
        for (const auto& [mono, c] : polys[p].terms()) {
            for (int v = 0; v < nvars; ++v) {
                if (mono[v] == 0) continue;
                uses[p][v] = 1;
                if (anchor < 0) {
                    anchor = v;
                } else {
                    parent[find(anchor)] = find(v);
                }
            }
        }
    }
    std::map<int, int> block_of_root;
    BlockSplit split;
    for (int v = 0; v < nvars; ++v) {
        int root = find(v);
        auto [it, fresh] = block_of_root.try_emplace(root, static_cast<int>(split.var_blocks.size()));
        if (fresh) split.var_blocks.emplace_back();
        split.var_blocks[it->second].push_back(v);
    }
    if (split.var_blocks.size() < 2) return {};
    split.poly_blocks.resize(split.var_blocks.size());
    for (size_t p = 0; p < polys.size(); ++p) {
        int block = -1;
        for (int v = 0; v < nvars; ++v) {
            if (!uses[p][v]) continue;
            int b = block_of_root.at(find(v));
            if (block < 0) block = b;
            if (b != block) return {};
        }
        if (block < 0) return {};  // constant polynomial; not homogeneous of degree >= 1 anyway
        split.poly_blocks[block].push_back(static_cast<int>(p));
    }
    for (size_t b = 0; b < split.var_blocks.size(); ++b) {
        if (split.var_blocks[b].size() != split.poly_blocks[b].size()) return {};
    }
    split.ok = true;
    return split;
}

MPoly project_to_vars(const MPoly& p, const std::vector<int>& vars) {
    MPoly out(static_cast<int>(vars.size()));
    for (const auto& [mono, c] : p.terms()) {
        std::vector<int> m(vars.size(), 0);
        for (size_t i = 0; i < vars.size(); ++i) m[i] = mono[vars[i]];
        out.add_term(m, c);
    }
    return out;
}

}  // namespace

Rat macaulay_resultant(const std::vector<MPoly>& polys, int nvars) {
    QuotientResult direct = try_quotient(polys, nvars);
    if (direct.ok) return direct.value;

    // Retry under permuted variable orderings; an odd permutation flips the
    // resultant sign exactly when prod(d_i) is odd.
    const bool odd_product = degree_product_odd(polys);
    std::vector<int> perm(nvars);
    std::iota(perm.begin(), perm.end(), 0);
    int tried = 0;
    while (std::next_permutation(perm.begin(), perm.end())) {
        if (++tried > 720) break;  // enough orderings for desk-scale systems
        std::vector<MPoly> permuted;
        permuted.reserve(polys.size());
        for (const auto& p : polys) permuted.push_back(p.permuted_vars(perm));
        QuotientResult res = try_quotient(permuted, nvars);
        if (res.ok) {
            if (odd_product && permutation_sign_negative(perm)) return -res.value;
            return res.value;
        }
    }

    // Block-decoupled fallback: Res(F, G) = Res(F)^{prod deg G} Res(G)^{prod deg F}
    // after sorting each block's variables and polynomials together.
    BlockSplit split = find_blocks(polys, nvars);
    if (split.ok) {
        bool sign_flip = false;
        if (odd_product) {
            std::vector<int> var_order;
            std::vector<int> poly_order;
            for (size_t b = 0; b < split.var_blocks.size(); ++b) {
                var_order.insert(var_order.end(), split.var_blocks[b].begin(),
                                 split.var_blocks[b].end());
                poly_order.insert(poly_order.end(), split.poly_blocks[b].begin(),
                                  split.poly_blocks[b].end());
            }
            sign_flip = permutation_sign_negative(var_order) ^ permutation_sign_negative(poly_order);
        }
        Rat out = 1;
        for (size_t b = 0; b < split.var_blocks.size(); ++b) {
            std::vector<MPoly> sub;
            for (int p : split.poly_blocks[b]) {
                sub.push_back(project_to_vars(polys[p], split.var_blocks[b]));
            }
            Rat res_b = macaulay_resultant(sub, static_cast<int>(split.var_blocks[b].size()));
            Int exp = 1;
            for (size_t c = 0; c < split.var_blocks.size(); ++c) {
                if (c == b) continue;
                for (int p : split.poly_blocks[c]) exp *= polys[p].total_degree();
            }
            out *= rat_pow(res_b, exp);
        }
        return sign_flip ? -out : out;
    }

    throw DegenerateMinorError(
        "Macaulay minor is singular under all tried variable orderings and the system "
        "does not decouple");
}

Rat charpoly_eval_oracle(const UniformHypergraph& h, const Rat& lambda0) {
    const int r = h.num_vertices();
    auto system_at = [&](const Rat& lam) {
        EigenSystem sys = eigen_system(h, lam);
        return sys.polys;
    };
    try {
        return macaulay_resultant(system_at(lambda0), r);
    } catch (const DegenerateMinorError&) {
        // phi_H is a polynomial in lambda of degree r(k-1)^{r-1}: interpolate it
        // exactly through generic sample points and evaluate at lambda0.
        Int deg_big = Int(r) * int_pow(Int(h.k() - 1), static_cast<unsigned long>(r - 1));
        unsigned long deg = to_ulong_checked(deg_big, "oracle interpolation degree");
        if (deg > 4096) throw;
        std::vector<Rat> xs, ys;
        long candidate = 1;
        while (xs.size() < deg + 1) {
            Rat x(candidate++);
            if (x == lambda0) continue;
            try {
                ys.push_back(macaulay_resultant(system_at(x), r));
                xs.push_back(x);
            } catch (const DegenerateMinorError&) {
                continue;  // skip degenerate sample points
            }
        }
        Rat value = 0;
        for (size_t i = 0; i < xs.size(); ++i) {
            Rat term = ys[i];
            for (size_t j = 0; j < xs.size(); ++j) {
                if (i == j) continue;
                term *= (lambda0 - xs[j]) / (xs[i] - xs[j]);
            }
            value += term;
        }
        return value;
    }
}

VerifyReport verify_formula(const UniformHypergraph& h, const FactoredCharPoly& f,
                            const std::vector<Rat>& lambdas) {
    VerifyReport rep;
    rep.all_equal = true;
    for (const Rat& lam : lambdas) {
        VerifyReport::Item item;
        item.lambda0 = lam;
        item.formula_value = f.eval(lam);
        item.oracle_value = charpoly_eval_oracle(h, lam);
        item.equal = (item.formula_value == item.oracle_value);
        rep.all_equal = rep.all_equal && item.equal;
        rep.items.push_back(std::move(item));
    }
    return rep;
}

}  // namespace hcp
