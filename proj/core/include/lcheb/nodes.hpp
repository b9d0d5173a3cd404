#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lcheb/arith.hpp"

namespace lcheb {

/// Parity-constrained multi-index: 0 <= i_j <= m_j, i_j = kappa_j - r mod 2.
/// The face set M collects the coordinates with 0 < i_j < m_j.
struct NodeIndex {
    ivec i;
    int r = 0;                   // parity class
    std::uint64_t m_mask = 0;    // bit j-1 set iff coordinate j is interior

    int face_size() const { return __builtin_popcountll(m_mask); }
};

/// Exact cos(num*pi/den): reduces the rational angle mod 2 and special-cases
/// multiples of pi/2 so that boundary values are exactly 0 or +-1.
double cos_pi_ratio(std::int64_t num, std::int64_t den);

std::optional<int> parity_of_index(const ParamVec& pv, const ivec& i);

std::vector<NodeIndex> enumerate_index_set(const ParamVec& pv, std::optional<int> r = {});

std::int64_t cardinality_formula(const ParamVec& pv, int r);

std::int64_t face_cardinality_formula(const ParamVec& pv, std::uint64_t m_mask, int r);

/// The full node family: indices in lexicographic order with points and
/// exact rational weights 2^{#M} / (2 p[m]).
class NodeSet {
  public:
    explicit NodeSet(ParamVec pv);

    const ParamVec& params() const { return pv_; }
    std::size_t size() const { return indices_.size(); }
    const std::vector<NodeIndex>& indices() const { return indices_; }
    const std::vector<std::vector<double>>& points() const { return points_; }
    std::int64_t weight_num(std::size_t k) const { return std::int64_t{1} << indices_[k].face_size(); }
    std::int64_t weight_den() const { return w_den_; }
    double weight(std::size_t k) const { return double(weight_num(k)) / double(w_den_); }

    /// Position of an index vector in enumeration order, or npos.
    std::size_t find(const ivec& i) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  private:
    ParamVec pv_;
    std::vector<NodeIndex> indices_;
    std::vector<std::vector<double>> points_;
    std::int64_t w_den_;
    std::map<ivec, std::size_t> lookup_;
};

/// Decoding map (l, rho) -> i on H x R for a fixed decomposition.
NodeIndex decode(const ParamVec& pv, const SharpFlat& sf, std::int64_t l, const ivec& rho);

/// Padua-like parameters: m = n with pairwise coprime entries.
ParamVec padua_like(const ivec& n, const ivec& kappa);

/// Morrow-Patterson-Xu-like parameters: m = (m,...,m) in dimension d.
ParamVec mpx(std::int64_t m, std::size_t d, const ivec& kappa);

}  // namespace lcheb
