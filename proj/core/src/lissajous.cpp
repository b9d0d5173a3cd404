#include "lcheb/lissajous.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace lcheb {

namespace {

std::vector<ivec> enumerate_rho(const SharpFlat& sf) {
    const std::size_t d = sf.m_flat.size();
    std::vector<ivec> out;
    ivec rho(d, 0);
    for (;;) {
        out.push_back(rho);
        std::size_t j = d;
        while (j > 0) {
            --j;
            if (++rho[j] < sf.m_flat[j]) break;
            rho[j] = 0;
            if (j == 0) return out;
        }
    }
}

double cheb_T1(std::int64_t n, double x) {
    if (n == 0) return 1.0;
    double t0 = 1.0, t1 = x;
    for (std::int64_t k = 1; k < n; ++k) {
        double t2 = 2.0 * x * t1 - t0;
        t0 = t1;
        t1 = t2;
    }
    return t1;
}

}  // namespace

std::vector<CurveSpec> curve_family(const ParamVec& pv, const SharpFlat& sf) {
    std::vector<CurveSpec> out;
    for (auto& rho : enumerate_rho(sf)) {
        CurveSpec c;
        c.rho = rho;
        c.xi.resize(pv.dim());
        c.u.assign(pv.dim(), 1);
        for (std::size_t j = 0; j < pv.dim(); ++j)
            c.xi[j] = 2 * rho[j] * sf.m_sharp[j] + pv.kappa[j];
        out.push_back(std::move(c));
    }
    return out;
}

NodeIndex sample_curve(const CurveSpec& c, const ParamVec& pv, const SharpFlat& sf,
                       std::int64_t l) {
    return decode(pv, sf, mod_floor(l, 2 * product_vec(sf.m_sharp)), c.rho);
}

std::vector<double> sample_curve_point(const CurveSpec& c, const ParamVec& pv, std::int64_t l) {
    // l(t_l)_j = cos((l - xi_j) pi / m_j), evaluated exactly at rational angles.
    std::vector<double> x(pv.dim());
    for (std::size_t j = 0; j < pv.dim(); ++j)
        x[j] = double(c.u[j]) * cos_pi_ratio(l - c.xi[j], pv.m[j]);
    return x;
}

std::vector<double> curve_point(const CurveSpec& c, const ParamVec& pv, double t) {
    const double lcm = double(pv.lcm());
    std::vector<double> x(pv.dim());
    for (std::size_t j = 0; j < pv.dim(); ++j)
        x[j] = double(c.u[j]) * std::cos((lcm * t - double(c.xi[j]) * M_PI) / double(pv.m[j]));
    return x;
}

ivec rho_dagger(const ParamVec& pv, const SharpFlat& sf, const ivec& rho) {
    // l_dagger is the CRT solution of l = kappa_i mod m_sharp_i.
    std::int64_t ld = crt_solve(sf.m_sharp, pv.kappa);
    ivec out(pv.dim());
    for (std::size_t j = 0; j < pv.dim(); ++j) {
        std::int64_t q = (ld - pv.kappa[j]) / sf.m_sharp[j];  // exact by construction
        out[j] = mod_floor(q - rho[j], sf.m_flat[j]);
    }
    return out;
}

std::int64_t n_degenerate_formula(const ParamVec& pv) {
    // Case analysis over M_0 = {i: m_i even}, K_r = {i: kappa_i = r mod 2}.
    int k0m0 = 0, k1m0 = 0;
    for (std::size_t j = 0; j < pv.dim(); ++j) {
        if (mod_floor(pv.m[j], 2) != 0) continue;
        if (mod_floor(pv.kappa[j], 2) == 0)
            ++k0m0;
        else
            ++k1m0;
    }
    if (k0m0 == 0 && k1m0 == 0) return 1;
    if (k0m0 > 0 && k1m0 > 0) return 0;
    int n = k0m0 > 0 ? k0m0 : k1m0;
    return std::int64_t{1} << (n - 1);
}

CurveFamily classify_curves(const ParamVec& pv, const SharpFlat& sf) {
    CurveFamily fam;
    fam.curves = curve_family(pv, sf);
    fam.classification.resize(fam.curves.size());
    std::map<ivec, std::size_t> pos;
    for (std::size_t k = 0; k < fam.curves.size(); ++k) pos[fam.curves[k].rho] = k;

    std::int64_t next_class = 0;
    std::int64_t fixpoints = 0;
    for (std::size_t k = 0; k < fam.curves.size(); ++k) {
        auto& cls = fam.classification[k];
        cls.partner = rho_dagger(pv, sf, fam.curves[k].rho);
        cls.degenerate = cls.partner == fam.curves[k].rho;
        if (cls.degenerate) ++fixpoints;
        std::size_t p = pos.at(cls.partner);
        if (p < k)
            cls.class_id = fam.classification[p].class_id;
        else
            cls.class_id = next_class++;
    }
    fam.n_degenerate = n_degenerate_formula(pv);
    if (fam.n_degenerate != fixpoints)
        throw std::logic_error("degenerate-curve count does not match closed form");
    fam.class_count = (product_vec(sf.m_flat) + fam.n_degenerate) / 2;
    if (fam.class_count != next_class)
        throw std::logic_error("curve class count does not match closed form");
    return fam;
}

double variety_residual(const ParamVec& pv, const std::vector<double>& x) {
    if (x.size() != pv.dim()) throw std::invalid_argument("variety_residual: dimension mismatch");
    auto signed_T = [&](std::size_t j) {
        double s = mod_floor(pv.kappa[j], 2) == 0 ? 1.0 : -1.0;
        return s * cheb_T1(pv.m[j], x[j]);
    };
    double ref = signed_T(0), res = 0.0;
    for (std::size_t j = 1; j < pv.dim(); ++j)
        res = std::max(res, std::abs(ref - signed_T(j)));
    return res;
}

std::vector<std::size_t> singular_points(const NodeSet& ns) {
    std::vector<std::size_t> out;
    if (ns.params().dim() < 2) return out;
    for (std::size_t k = 0; k < ns.size(); ++k)
        if (ns.indices()[k].face_size() >= 2) out.push_back(k);
    return out;
}

}  // namespace lcheb
