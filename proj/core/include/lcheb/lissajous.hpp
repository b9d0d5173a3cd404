#pragma once

#include <cstdint>
#include <vector>

#include "lcheb/arith.hpp"
#include "lcheb/nodes.hpp"

namespace lcheb {

/// One member of the curve family: t -> (u_j cos((lcm[m] t - xi_j pi)/m_j)).
struct CurveSpec {
    ivec rho;  // generating parameter in R^{(m_flat)}
    ivec xi;   // offsets 2 rho_j m_sharp_j + kappa_j
    ivec u;    // sign vector, all +1 by default
};

struct CurveClassification {
    bool degenerate = false;
    ivec partner;              // rho^dagger
    std::int64_t class_id = 0; // index into the {rho, rho^dagger} partition
};

struct CurveFamily {
    std::vector<CurveSpec> curves;                     // rho in lexicographic order
    std::vector<CurveClassification> classification;   // aligned with curves
    std::int64_t n_degenerate = 0;                     // closed-form N_deg
    std::int64_t class_count = 0;                      // (p[m_flat] + N_deg)/2
};

std::vector<CurveSpec> curve_family(const ParamVec& pv, const SharpFlat& sf);

/// Node index hit by curve c at sampling parameter t_l = l pi / lcm[m].
NodeIndex sample_curve(const CurveSpec& c, const ParamVec& pv, const SharpFlat& sf,
                       std::int64_t l);

/// Floating-point curve point at t_l (cross-check path).
std::vector<double> sample_curve_point(const CurveSpec& c, const ParamVec& pv, std::int64_t l);

/// Floating-point curve point at arbitrary parameter t.
std::vector<double> curve_point(const CurveSpec& c, const ParamVec& pv, double t);

ivec rho_dagger(const ParamVec& pv, const SharpFlat& sf, const ivec& rho);

/// Closed-form number of degenerate curves.
std::int64_t n_degenerate_formula(const ParamVec& pv);

CurveFamily classify_curves(const ParamVec& pv, const SharpFlat& sf);

/// Max_j |(-1)^{kappa_1} T_{m_1}(x_1) - (-1)^{kappa_j} T_{m_j}(x_j)|;
/// zero exactly on the Chebyshev variety.
double variety_residual(const ParamVec& pv, const std::vector<double>& x);

/// Nodes whose face set has #M >= 2 (the singular points of the variety).
std::vector<std::size_t> singular_points(const NodeSet& ns);

}  // namespace lcheb
