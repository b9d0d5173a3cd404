#include "lcheb/nodes.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lcheb {

double cos_pi_ratio(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw std::invalid_argument("cos_pi_ratio: denominator must be positive");
    std::int64_t n = mod_floor(num, 2 * den);  // angle in [0, 2pi)
    if (n > den) n = 2 * den - n;              // cosine symmetry about pi
    if (n == 0) return 1.0;
    if (n == den) return -1.0;
    if (2 * n == den) return 0.0;
    return std::cos(M_PI * double(n) / double(den));
}

std::optional<int> parity_of_index(const ParamVec& pv, const ivec& i) {
    if (i.size() != pv.dim()) return {};
    int r = int(mod_floor(pv.kappa[0] - i[0], 2));
    for (std::size_t j = 0; j < pv.dim(); ++j) {
        if (i[j] < 0 || i[j] > pv.m[j]) return {};
        if (mod_floor(pv.kappa[j] - i[j], 2) != r) return {};
    }
    return r;
}

namespace {

std::uint64_t face_mask(const ParamVec& pv, const ivec& i) {
    std::uint64_t mask = 0;
    for (std::size_t j = 0; j < pv.dim(); ++j)
        if (i[j] > 0 && i[j] < pv.m[j]) mask |= std::uint64_t{1} << j;
    return mask;
}

void enumerate_parity(const ParamVec& pv, int r, std::vector<NodeIndex>& out) {
    const std::size_t d = pv.dim();
    ivec start(d), i(d);
    for (std::size_t j = 0; j < d; ++j) {
        start[j] = mod_floor(pv.kappa[j] - r, 2);
        if (start[j] > pv.m[j]) return;  // m_j = 0 cannot happen; m_j = 1 handled below
    }
    i = start;
    for (;;) {
        out.push_back(NodeIndex{i, r, face_mask(pv, i)});
        std::size_t j = d;
        while (j > 0) {
            --j;
            i[j] += 2;
            if (i[j] <= pv.m[j]) break;
            i[j] = start[j];
            if (j == 0) return;
        }
    }
}

}  // namespace

std::vector<NodeIndex> enumerate_index_set(const ParamVec& pv, std::optional<int> r) {
    std::vector<NodeIndex> out;
    if (r) {
        enumerate_parity(pv, *r, out);
        return out;
    }
    enumerate_parity(pv, 0, out);
    enumerate_parity(pv, 1, out);
    std::sort(out.begin(), out.end(),
              [](const NodeIndex& a, const NodeIndex& b) { return a.i < b.i; });
    return out;
}

std::int64_t cardinality_formula(const ParamVec& pv, int r) {
    // #I_{kappa,r} = 2^{-d} prod_i (m_i + 2 - s - 2t + 2st),
    // s = m_i mod 2, t = (kappa_i - r) mod 2.
    std::int64_t num = 1;
    for (std::size_t j = 0; j < pv.dim(); ++j) {
        std::int64_t s = mod_floor(pv.m[j], 2);
        std::int64_t t = mod_floor(pv.kappa[j] - r, 2);
        std::int64_t factor = pv.m[j] + 2 - s - 2 * t + 2 * s * t;
        num = checked_mul(num, factor / 2);  // each factor is even
    }
    return num;
}

std::int64_t face_cardinality_formula(const ParamVec& pv, std::uint64_t m_mask, int r) {
    // #I_{kappa,M,r} = 2^{-#M} prod_{i in M} (m_i - 2 + s + 2t - 2st)
    //                  * prod_{i not in M} (2 - s - 2t + 2st).
    std::int64_t count = 1;
    for (std::size_t j = 0; j < pv.dim(); ++j) {
        std::int64_t s = mod_floor(pv.m[j], 2);
        std::int64_t t = mod_floor(pv.kappa[j] - r, 2);
        if (m_mask & (std::uint64_t{1} << j)) {
            std::int64_t factor = pv.m[j] - 2 + s + 2 * t - 2 * s * t;
            if (factor < 0) factor = 0;  // m_j = 1 has no interior values
            count = checked_mul(count, factor / 2);
        } else {
            count = checked_mul(count, 2 - s - 2 * t + 2 * s * t);
        }
    }
    return count;
}

NodeSet::NodeSet(ParamVec pv) : pv_(std::move(pv)) {
    indices_ = enumerate_index_set(pv_);
    w_den_ = checked_mul(2, pv_.product());
    points_.reserve(indices_.size());
    for (std::size_t k = 0; k < indices_.size(); ++k) {
        std::vector<double> x(pv_.dim());
        for (std::size_t j = 0; j < pv_.dim(); ++j)
            x[j] = cos_pi_ratio(indices_[k].i[j], pv_.m[j]);
        points_.push_back(std::move(x));
        lookup_.emplace(indices_[k].i, k);
    }
}

std::size_t NodeSet::find(const ivec& i) const {
    auto it = lookup_.find(i);
    return it == lookup_.end() ? npos : it->second;
}

NodeIndex decode(const ParamVec& pv, const SharpFlat& sf, std::int64_t l, const ivec& rho) {
    if (rho.size() != pv.dim()) throw std::domain_error("decode: rho dimension mismatch");
    std::int64_t h = checked_mul(2, product_vec(sf.m_sharp));
    if (l < 0 || l >= h) throw std::domain_error("decode: l out of range");
    for (std::size_t j = 0; j < pv.dim(); ++j)
        if (rho[j] < 0 || rho[j] >= sf.m_flat[j])
            throw std::domain_error("decode: rho out of range");
    NodeIndex out;
    out.i.resize(pv.dim());
    out.r = int(mod_floor(l, 2));
    for (std::size_t j = 0; j < pv.dim(); ++j) {
        std::int64_t a =
            mod_floor(l - 2 * rho[j] * sf.m_sharp[j] - pv.kappa[j], 2 * pv.m[j]);
        out.i[j] = std::min(a, 2 * pv.m[j] - a);
    }
    for (std::size_t j = 0; j < pv.dim(); ++j)
        if (out.i[j] > 0 && out.i[j] < pv.m[j]) out.m_mask |= std::uint64_t{1} << j;
    return out;
}

ParamVec padua_like(const ivec& n, const ivec& kappa) {
    for (std::size_t i = 0; i < n.size(); ++i)
        for (std::size_t j = i + 1; j < n.size(); ++j)
            if (std::gcd(n[i], n[j]) != 1)
                throw std::domain_error("padua_like: entries must be pairwise coprime");
    return ParamVec(n, kappa);
}

ParamVec mpx(std::int64_t m, std::size_t d, const ivec& kappa) {
    if (m < 1 || d < 1) throw std::domain_error("mpx: require m >= 1 and d >= 1");
    return ParamVec(ivec(d, m), kappa);
}

}  // namespace lcheb
