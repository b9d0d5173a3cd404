#include "lcheb/interp.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lcheb {

std::string space_name(Space s) { return s == Space::plain ? "plain" : "averaged"; }

Space parse_space(const std::string& s) {
    if (s == "plain") return Space::plain;
    if (s == "averaged") return Space::averaged;
    throw std::invalid_argument("unknown space '" + s + "' (expected plain|averaged)");
}

double cheb_T(const ivec& gamma, const std::vector<double>& x) {
    if (gamma.size() != x.size()) throw std::invalid_argument("cheb_T: dimension mismatch");
    double prod = 1.0;
    for (std::size_t j = 0; j < gamma.size(); ++j) {
        double xj = x[j];
        if (std::abs(xj) > 1.0 + 1e-12)
            throw std::domain_error("cheb_T: point outside [-1,1]^d");
        xj = std::clamp(xj, -1.0, 1.0);
        if (gamma[j] == 0) continue;
        double t0 = 1.0, t1 = xj;
        for (std::int64_t k = 1; k < gamma[j]; ++k) {
            double t2 = 2.0 * xj * t1 - t0;
            t0 = t1;
            t1 = t2;
        }
        prod *= t1;
    }
    return prod;
}

namespace {

/// 2^{e(gamma) - f(gamma)} as a double.
double scale_ef(const ParamVec& pv, const ivec& gamma) {
    return std::ldexp(1.0, e_count(gamma) - f_count(pv, gamma));
}

/// Naive exact-sum cosine transform of one line, via a table of exact
/// cosines at the rational angles t pi / m, t = 0..2m-1.
void dct1_line_naive(const double* in, double* out, std::int64_t m,
                     const std::vector<double>& table) {
    for (std::int64_t k = 0; k <= m; ++k) {
        KahanSum sum;
        for (std::int64_t i = 0; i <= m; ++i) sum.add(in[i] * table[(i * k) % (2 * m)]);
        out[k] = sum.value();
    }
}

}  // namespace

void dct1_multi(std::vector<double>& data, const ivec& m, bool force_naive) {
    const std::size_t d = m.size();
    ivec dims(d), stride(d);
    std::int64_t total = 1;
    for (std::size_t j = 0; j < d; ++j) dims[j] = m[j] + 1;
    for (std::size_t j = d; j-- > 0;) {
        stride[j] = total;
        total = checked_mul(total, dims[j]);
    }
    if (std::int64_t(data.size()) != total)
        throw std::invalid_argument("dct1_multi: data size does not match box");
    const bool use_fftw = !force_naive && total >= 4096;

    std::vector<double> in_buf, out_buf;
    for (std::size_t axis = 0; axis < d; ++axis) {
        const std::int64_t n = dims[axis];
        const std::int64_t st = stride[axis];
        in_buf.assign(n, 0.0);
        out_buf.assign(n, 0.0);

        std::vector<double> table;
        fftw_plan plan = nullptr;
        if (use_fftw) {
            plan = fftw_plan_r2r_1d(int(n), in_buf.data(), out_buf.data(), FFTW_REDFT00,
                                    FFTW_ESTIMATE);
        } else {
            table.resize(2 * m[axis]);
            for (std::int64_t t = 0; t < 2 * m[axis]; ++t)
                table[t] = cos_pi_ratio(t, m[axis]);
        }

        const std::int64_t lines = total / n;
        for (std::int64_t line = 0; line < lines; ++line) {
            // Base offset of this line: decompose line over the other axes.
            std::int64_t rest = line, base = 0;
            for (std::size_t j = d; j-- > 0;) {
                if (j == axis) continue;
                base += (rest % dims[j]) * stride[j];
                rest /= dims[j];
            }
            for (std::int64_t i = 0; i < n; ++i) in_buf[i] = data[base + i * st];
            if (use_fftw) {
                fftw_execute_r2r(plan, in_buf.data(), out_buf.data());
                // REDFT00: X_k = x_0 + (-1)^k x_{m} + 2 sum_{mid}; the
                // contract is S_k = (X_k + x_0 + (-1)^k x_m) / 2.
                const double x0 = in_buf[0], xm = in_buf[n - 1];
                for (std::int64_t k = 0; k < n; ++k)
                    out_buf[k] = 0.5 * (out_buf[k] + x0 + (k % 2 == 0 ? xm : -xm));
            } else {
                dct1_line_naive(in_buf.data(), out_buf.data(), m[axis], table);
            }
            for (std::int64_t i = 0; i < n; ++i) data[base + i * st] = out_buf[i];
        }
        if (plan) fftw_destroy_plan(plan);
    }
}

namespace {

std::int64_t box_offset(const ivec& i, const ivec& m) {
    std::int64_t off = 0;
    for (std::size_t j = 0; j < m.size(); ++j) off = off * (m[j] + 1) + i[j];
    return off;
}

}  // namespace

double ChebCoeffs::evaluate(const std::vector<double>& x) const {
    KahanSum sum;
    for (std::size_t g = 0; g < gamma.size(); ++g) {
        double cg = c[g];
        if (cg == 0.0) continue;
        if (space == Space::averaged) cg /= double(class_size[g]);
        sum.add(cg * cheb_T(gamma[g], x));
    }
    return sum.value();
}

std::vector<double> ChebCoeffs::evaluate_box_grid() const {
    std::int64_t total = 1;
    for (auto mj : pv.m) total = checked_mul(total, mj + 1);
    std::vector<double> box(total, 0.0);
    for (std::size_t g = 0; g < gamma.size(); ++g) {
        double cg = c[g];
        if (space == Space::averaged) cg /= double(class_size[g]);
        box[box_offset(gamma[g], pv.m)] = cg;
    }
    // The same symmetric cosine-sum kernel evaluates
    // P(z_i) = sum_gamma c'_gamma prod_j cos(gamma_j i_j pi / m_j).
    dct1_multi(box, pv.m);
    return box;
}

std::vector<double> ChebCoeffs::evaluate_nodes(const NodeSet& ns) const {
    auto box = evaluate_box_grid();
    std::vector<double> out(ns.size());
    for (std::size_t k = 0; k < ns.size(); ++k)
        out[k] = box[box_offset(ns.indices()[k].i, pv.m)];
    return out;
}

double kernel_plain(const SpectralBasis& sb, const std::vector<double>& z,
                    const std::vector<double>& x) {
    const auto& pv = sb.params();
    KahanSum sum;
    for (auto g : sb.representatives()) {
        const auto& gamma = sb.gamma_bar()[g];
        sum.add(scale_ef(pv, gamma) * cheb_T(gamma, z) * cheb_T(gamma, x));
    }
    ivec gamma_star(pv.dim(), 0);
    gamma_star.back() = pv.m.back();
    sum.add(-cheb_T(gamma_star, z) * cheb_T(gamma_star, x));
    return sum.value();
}

double kernel_averaged(const SpectralBasis& sb, const std::vector<double>& z,
                       const std::vector<double>& x) {
    const auto& pv = sb.params();
    KahanSum sum;
    for (std::size_t g = 0; g < sb.gamma_bar().size(); ++g) {
        const auto& gamma = sb.gamma_bar()[g];
        double w = scale_ef(pv, gamma) / double(sb.class_size(g));
        if (is_s0_member(pv, gamma)) w -= 1.0 / double(pv.dim());
        sum.add(w * cheb_T(gamma, z) * cheb_T(gamma, x));
    }
    return sum.value();
}

std::vector<double> coefficients_direct(const NodeSet& ns, const SpectralBasis& sb,
                                        const GridFunction& h) {
    std::vector<double> out(sb.gamma_bar().size());
    for (std::size_t g = 0; g < out.size(); ++g) {
        auto chi_g = chi_on_nodes(ns, sb.gamma_bar()[g]);
        out[g] = discrete_inner(ns, h, chi_g) / chi_norm_sq(sb, g);
    }
    return out;
}

std::vector<double> coefficients_dct(const NodeSet& ns, const SpectralBasis& sb,
                                     const GridFunction& h) {
    const auto& pv = ns.params();
    std::int64_t total = 1;
    for (auto mj : pv.m) total = checked_mul(total, mj + 1);
    std::vector<double> box(total, 0.0);
    for (std::size_t k = 0; k < ns.size(); ++k)
        box[box_offset(ns.indices()[k].i, pv.m)] = ns.weight(k) * h[k];
    dct1_multi(box, pv.m);
    std::vector<double> out(sb.gamma_bar().size());
    for (std::size_t g = 0; g < out.size(); ++g) {
        const auto& gamma = sb.gamma_bar()[g];
        double ghat = box[box_offset(gamma, pv.m)];
        out[g] = is_s0_member(pv, gamma) ? ghat : scale_ef(pv, gamma) * ghat;
    }
    return out;
}

ChebCoeffs interpolate(const NodeSet& ns, const SpectralBasis& sb, const GridFunction& h,
                       Space space, bool use_dct) {
    ChebCoeffs out{ns.params(), space, sb.gamma_bar(), {}, {}};
    out.c = use_dct ? coefficients_dct(ns, sb, h) : coefficients_direct(ns, sb, h);
    out.class_size.resize(out.gamma.size());
    for (std::size_t g = 0; g < out.gamma.size(); ++g) {
        out.class_size[g] = sb.class_size(g);
        if (space == Space::plain && !sb.is_representative(g)) out.c[g] = 0.0;
    }
    return out;
}

double interpolation_residual(const NodeSet& ns, const ChebCoeffs& coeffs,
                              const GridFunction& h) {
    auto vals = coeffs.evaluate_nodes(ns);
    double res = 0.0;
    for (std::size_t k = 0; k < ns.size(); ++k) res = std::max(res, std::abs(vals[k] - h[k]));
    return res;
}

double quadrature(const NodeSet& ns, const GridFunction& h) {
    if (h.size() != ns.size()) throw std::invalid_argument("quadrature: domain mismatch");
    KahanSum sum;
    for (std::size_t k = 0; k < ns.size(); ++k) sum.add(ns.weight(k) * h[k]);
    return sum.value();
}

bool weight_sum_is_one(const NodeSet& ns) {
    std::int64_t num = 0;
    for (std::size_t k = 0; k < ns.size(); ++k) num += ns.weight_num(k);
    return num == ns.weight_den();
}

}  // namespace lcheb
