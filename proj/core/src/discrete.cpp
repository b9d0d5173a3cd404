#include "lcheb/discrete.hpp"

#include <cmath>
#include <stdexcept>

namespace lcheb {

GridFunction::GridFunction(const NodeSet& ns, std::vector<double> v) : values(std::move(v)) {
    if (values.size() != ns.size())
        throw std::invalid_argument("GridFunction: values must cover the index set exactly");
}

double chi(const ParamVec& pv, const ivec& gamma, const ivec& i) {
    if (gamma.size() != pv.dim() || i.size() != pv.dim())
        throw std::invalid_argument("chi: dimension mismatch");
    double prod = 1.0;
    for (std::size_t j = 0; j < pv.dim(); ++j) {
        prod *= cos_pi_ratio(checked_mul(gamma[j], i[j]), pv.m[j]);
        if (prod == 0.0) return 0.0;
    }
    return prod;
}

GridFunction chi_on_nodes(const NodeSet& ns, const ivec& gamma) {
    std::vector<double> v(ns.size());
    for (std::size_t k = 0; k < ns.size(); ++k)
        v[k] = chi(ns.params(), gamma, ns.indices()[k].i);
    return GridFunction(ns, std::move(v));
}

double discrete_inner(const NodeSet& ns, const GridFunction& h1, const GridFunction& h2) {
    if (h1.size() != ns.size() || h2.size() != ns.size())
        throw std::invalid_argument("discrete_inner: domain mismatch");
    KahanSum sum;
    for (std::size_t k = 0; k < ns.size(); ++k) sum.add(h1[k] * h2[k] * ns.weight(k));
    return sum.value();
}

double chi_norm_sq(const SpectralBasis& sb, std::size_t g) {
    const auto& gamma = sb.gamma_bar()[g];
    if (is_s0_member(sb.params(), gamma)) return 1.0;
    int e = e_count(gamma), f = f_count(sb.params(), gamma);
    return std::ldexp(1.0, f - e);
}

std::pair<bool, int> is_alias(const ParamVec& pv, const ivec& gamma) {
    std::int64_t hsum = 0, theta = 0;
    for (std::size_t j = 0; j < pv.dim(); ++j) {
        if (gamma[j] % pv.m[j] != 0) return {false, 0};
        std::int64_t h = gamma[j] / pv.m[j];
        hsum += h;
        theta += h * pv.kappa[j];
    }
    if (mod_floor(hsum, 2) != 0) return {false, 0};
    return {true, int(mod_floor(theta, 2))};
}

std::vector<double> gram_matrix(const NodeSet& ns, const std::vector<ivec>& gammas) {
    const std::size_t n = gammas.size();
    std::vector<GridFunction> chis;
    chis.reserve(n);
    for (auto& g : gammas) chis.push_back(chi_on_nodes(ns, g));
    std::vector<double> out(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            double v = discrete_inner(ns, chis[a], chis[b]);
            out[a * n + b] = v;
            out[b * n + a] = v;
        }
    return out;
}

}  // namespace lcheb
