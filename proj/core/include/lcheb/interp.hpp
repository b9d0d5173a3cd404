#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lcheb/discrete.hpp"
#include "lcheb/nodes.hpp"
#include "lcheb/spectral.hpp"

namespace lcheb {

enum class Space { plain, averaged };

std::string space_name(Space s);
Space parse_space(const std::string& s);

/// Product Chebyshev polynomial T_gamma(x), three-term recurrence per factor.
double cheb_T(const ivec& gamma, const std::vector<double>& x);

/// Dense Chebyshev coefficients over gamma_bar (lexicographic order).
/// For Space::plain the support is the representative set; evaluation is
/// sum c_gamma T_gamma.  For Space::averaged all of gamma_bar carries
/// coefficients and evaluation is sum (c_gamma / #[gamma]) T_gamma.
struct ChebCoeffs {
    ParamVec pv;
    Space space = Space::plain;
    std::vector<ivec> gamma;              // gamma_bar, lexicographic
    std::vector<double> c;                // c_gamma
    std::vector<std::int64_t> class_size; // #[gamma]

    double evaluate(const std::vector<double>& x) const;

    /// Values on the full CGL product grid J = prod {0..m_i} (row-major,
    /// last coordinate fastest), computed by inverse cosine transforms.
    std::vector<double> evaluate_box_grid() const;

    /// Values at the nodes, via the grid fast path.
    std::vector<double> evaluate_nodes(const NodeSet& ns) const;
};

/// Interpolation kernels; fundamental polynomials are w_i * kernel(z_i, .).
double kernel_plain(const SpectralBasis& sb, const std::vector<double>& z,
                    const std::vector<double>& x);
double kernel_averaged(const SpectralBasis& sb, const std::vector<double>& z,
                       const std::vector<double>& x);

/// Coefficients c_gamma(h) = <h, chi_gamma> / ||chi_gamma||^2 for all
/// gamma in gamma_bar, by explicit inner products (slow reference path).
std::vector<double> coefficients_direct(const NodeSet& ns, const SpectralBasis& sb,
                                        const GridFunction& h);

/// Same coefficients via d successive type-I cosine transforms on the
/// zero-extended grid g(i) = w_i h(i).
std::vector<double> coefficients_dct(const NodeSet& ns, const SpectralBasis& sb,
                                     const GridFunction& h);

ChebCoeffs interpolate(const NodeSet& ns, const SpectralBasis& sb, const GridFunction& h,
                       Space space, bool use_dct = true);

/// Max |P(z_i) - h(i)| over all nodes.
double interpolation_residual(const NodeSet& ns, const ChebCoeffs& coeffs,
                              const GridFunction& h);

/// Quadrature rule sum_i w_i h(i), approximating (1/pi^d) int P w dx.
double quadrature(const NodeSet& ns, const GridFunction& h);

/// Exact rational check that the weights sum to 1.
bool weight_sum_is_one(const NodeSet& ns);

/// In-place cosine transforms S_k = sum_i x_i cos(i k pi / m) applied
/// along every axis of the row-major box with dims m_j + 1.
void dct1_multi(std::vector<double>& data, const ivec& m, bool force_naive = false);

}  // namespace lcheb
