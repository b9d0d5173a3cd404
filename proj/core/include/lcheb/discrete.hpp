#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lcheb/nodes.hpp"
#include "lcheb/spectral.hpp"

namespace lcheb {

/// Real-valued function on the full index set I, stored in enumeration order.
struct GridFunction {
    std::vector<double> values;

    GridFunction() = default;
    GridFunction(const NodeSet& ns, std::vector<double> v);

    double operator[](std::size_t k) const { return values[k]; }
    std::size_t size() const { return values.size(); }
};

/// chi_gamma(i) = prod_j cos(gamma_j i_j pi / m_j), evaluated exactly.
double chi(const ParamVec& pv, const ivec& gamma, const ivec& i);

/// Samples of chi_gamma over the whole node set.
GridFunction chi_on_nodes(const NodeSet& ns, const ivec& gamma);

/// <h1, h2> under the discrete measure omega (compensated summation).
double discrete_inner(const NodeSet& ns, const GridFunction& h1, const GridFunction& h2);

/// ||chi_gamma||^2 = 2^{-e+f} off S(0), 1 on S(0).
double chi_norm_sq(const SpectralBasis& sb, std::size_t g);

/// Integral test: gamma aliases iff gamma = h.m componentwise with sum h even;
/// second element is theta = sum h_i kappa_i mod 2 (integral = (-1)^theta).
std::pair<bool, int> is_alias(const ParamVec& pv, const ivec& gamma);

/// Gram matrix of {chi_gamma} for the given gammas, row-major.
std::vector<double> gram_matrix(const NodeSet& ns, const std::vector<ivec>& gammas);

/// Kahan-compensated sum helper used throughout.
class KahanSum {
  public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

  private:
    double s_ = 0.0, c_ = 0.0;
};

}  // namespace lcheb
