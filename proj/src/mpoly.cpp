#include "hcp/mpoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hcp {

void MPoly::add_term(const std::vector<int>& mono, const LamCoef& c) {
    if (static_cast<int>(mono.size()) != nvars_)
        throw std::invalid_argument("MPoly::add_term: monomial arity mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
        it->second.c0 += c.c0;
        it->second.c1 += c.c1;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly out(*this);
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly out(*this);
    for (const auto& [m, c] : o.terms_) out.add_term(m, {-c.c0, -c.c1});
    return out;
}

MPoly MPoly::shifted(const std::vector<int>& shift) const {
    MPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
        std::vector<int> mono(m);
        for (int i = 0; i < nvars_; ++i) mono[i] += shift[i];
        out.terms_.emplace(std::move(mono), c);
    }
    return out;
}

int MPoly::total_degree() const {
    int deg = -1;
    for (const auto& [m, c] : terms_) {
        deg = std::max(deg, std::accumulate(m.begin(), m.end(), 0));
    }
    return deg;
}

bool MPoly::is_homogeneous() const {
    int deg = -1;
    for (const auto& [m, c] : terms_) {
        int d = std::accumulate(m.begin(), m.end(), 0);
        if (deg < 0) {
            deg = d;
        } else if (d != deg) {
            return false;
        }
    }
    return true;
}

MPoly MPoly::substitute_lambda(const Rat& lambda0) const {
    MPoly out(nvars_);
    for (const auto& [m, c] : terms_) out.add_term(m, {c.c0 + c.c1 * lambda0, Rat(0)});
    return out;
}

MPoly MPoly::substitute_var(int v, int value) const {
    if (value != 0 && value != 1) throw std::invalid_argument("substitute_var: value must be 0 or 1");
    MPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
        if (value == 0 && m[v] > 0) continue;
        std::vector<int> mono(m);
        mono[v] = 0;
        out.add_term(mono, c);
    }
    return out;
}

MPoly MPoly::permuted_vars(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != nvars_)
        throw std::invalid_argument("permuted_vars: permutation size mismatch");
    MPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
        std::vector<int> mono(nvars_, 0);
        for (int i = 0; i < nvars_; ++i) mono[perm[i]] = m[i];
        out.add_term(mono, c);
    }
    return out;
}

std::string MPoly::to_string(const std::string& varname) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(";
        if (c.c1 != 0) {
            os << c.c1.get_str() << "L";
            if (c.c0 != 0) os << "+" << c.c0.get_str();
        } else {
            os << c.c0.get_str();
        }
        os << ")";
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            os << "*" << varname << i;
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

EigenSystem eigen_system(const UniformHypergraph& h, const std::optional<Rat>& lambda_value) {
    const int r = h.num_vertices();
    const int k = h.k();
    EigenSystem sys;
    sys.lambda_value = lambda_value;
    sys.variables.resize(r);
    std::iota(sys.variables.begin(), sys.variables.end(), 0);
    for (int v = 0; v < r; ++v) {
        MPoly p(r);
        std::vector<int> head(r, 0);
        head[v] = k - 1;
        if (lambda_value) {
            p.add_term(head, {*lambda_value, Rat(0)});
        } else {
            p.add_term(head, {Rat(0), Rat(1)});
        }
        for (int eid : h.incident_edges(v)) {
            std::vector<int> mono(r, 0);
            for (int u : h.edge(eid)) {
                if (u != v) mono[u] = 1;
            }
            p.add_term(mono, {Rat(-1), Rat(0)});
        }
        sys.polys.push_back(std::move(p));
    }
    return sys;
}

PoissonSplit poisson_split(const UniformHypergraph& h, int w,
                           const std::optional<Rat>& lambda_value) {
    if (w < 0 || w >= h.num_vertices()) throw std::invalid_argument("poisson_split: bad vertex");
    EigenSystem sys = eigen_system(h, lambda_value);
    PoissonSplit out{w, MPoly(h.num_vertices()), {}, {}, {}};
    out.f_w = sys.polys[w].substitute_var(w, 1);
    for (int v = 0; v < h.num_vertices(); ++v) {
        if (v == w) continue;
        out.remaining.push_back(v);
        out.f.push_back(sys.polys[v].substitute_var(w, 1));
        out.f_bar.push_back(sys.polys[v].substitute_var(w, 0));
    }
    return out;
}

}  // namespace hcp
