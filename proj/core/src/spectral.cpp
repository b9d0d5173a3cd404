#include "lcheb/spectral.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace lcheb {

namespace {

/// Odometer over the box prod {0..m_i}, visiting gamma in lexicographic order.
template <class F>
void for_each_box(const ivec& m, F&& f) {
    const std::size_t d = m.size();
    ivec g(d, 0);
    for (;;) {
        f(g);
        std::size_t j = d;
        while (j > 0) {
            --j;
            if (++g[j] <= m[j]) break;
            g[j] = 0;
            if (j == 0) return;
        }
    }
}

bool in_gamma_kr(const ParamVec& pv, const ivec& g, int r) {
    for (std::size_t j = 0; j < pv.dim(); ++j) {
        bool closed = mod_floor(pv.kappa[j] - r, 2) == 0;
        if (closed ? 2 * g[j] > pv.m[j] : 2 * g[j] >= pv.m[j]) return false;
    }
    return true;
}

bool in_gamma_open(const ParamVec& pv, const ivec& g) {
    for (std::size_t j = 0; j < pv.dim(); ++j)
        if (g[j] >= pv.m[j]) return false;
    for (std::size_t i = 0; i < pv.dim(); ++i)
        for (std::size_t j = i + 1; j < pv.dim(); ++j)
            if (g[i] * pv.m[j] + g[j] * pv.m[i] >= pv.m[i] * pv.m[j]) return false;
    return true;
}

bool in_gamma_bar(const ParamVec& pv, const ivec& g) {
    for (std::size_t j = 0; j < pv.dim(); ++j)
        if (g[j] > pv.m[j]) return false;
    for (std::size_t i = 0; i < pv.dim(); ++i)
        for (std::size_t j = i + 1; j < pv.dim(); ++j) {
            if (g[i] * pv.m[j] + g[j] * pv.m[i] > pv.m[i] * pv.m[j]) return false;
            if (2 * g[i] == pv.m[i] && 2 * g[j] == pv.m[j] &&
                mod_floor(pv.kappa[i] - pv.kappa[j], 2) != 0)
                return false;
        }
    return true;
}

/// kappa[gamma]: kappa_k for the unique k with 2 gamma_k > m_k, else 0.
std::int64_t kappa_of_gamma(const ParamVec& pv, const ivec& g) {
    for (std::size_t j = 0; j < pv.dim(); ++j)
        if (2 * g[j] > pv.m[j]) return pv.kappa[j];
    return 0;
}

}  // namespace

GammaSets gamma_sets(const ParamVec& pv) {
    GammaSets out;
    for_each_box(pv.m, [&](const ivec& g) {
        if (in_gamma_kr(pv, g, 0)) out.gamma_k0.push_back(g);
        if (in_gamma_kr(pv, g, 1)) out.gamma_k1.push_back(g);
        if (in_gamma_open(pv, g)) out.gamma_o.push_back(g);
        if (in_gamma_bar(pv, g)) out.gamma_bar.push_back(g);
    });
    return out;
}

ivec reflect(const ParamVec& pv, const ivec& gamma, std::size_t j) {
    if (j >= pv.dim()) throw std::invalid_argument("reflect: coordinate out of range");
    ivec out = gamma;
    out[j] = pv.m[j] - gamma[j];
    return out;
}

int e_count(const ivec& gamma) {
    return int(std::count_if(gamma.begin(), gamma.end(), [](std::int64_t v) { return v > 0; }));
}

int f_count(const ParamVec& pv, const ivec& gamma) {
    int halves = 0;
    for (std::size_t j = 0; j < pv.dim(); ++j)
        if (2 * gamma[j] == pv.m[j]) ++halves;
    return halves > 0 ? halves - 1 : 0;
}

bool gcd_le2_criterion(const ParamVec& pv) {
    for (std::size_t i = 0; i < pv.dim(); ++i)
        for (std::size_t j = i + 1; j < pv.dim(); ++j)
            if (std::gcd(pv.m[i], pv.m[j]) > 2) return false;
    return true;
}

bool is_s0_member(const ParamVec& pv, const ivec& gamma) {
    int hits = 0;
    for (std::size_t j = 0; j < pv.dim(); ++j) {
        if (gamma[j] == 0) continue;
        if (gamma[j] != pv.m[j]) return false;
        ++hits;
    }
    return hits == 1;
}

SpectralBasis::SpectralBasis(ParamVec pv) : pv_(std::move(pv)), sets_(gamma_sets(pv_)) {
    const std::size_t n = sets_.gamma_bar.size();
    std::map<ivec, std::size_t> pos;
    for (std::size_t g = 0; g < n; ++g) pos[sets_.gamma_bar[g]] = g;

    // Singleton classes: the union of Gamma_{kappa,0} and Gamma_{kappa,1}.
    std::vector<char> singleton(n, 0);
    for (auto* set : {&sets_.gamma_k0, &sets_.gamma_k1})
        for (auto& g : *set) singleton[pos.at(g)] = 1;

    std::vector<SpectralClass> classes;
    for (std::size_t g = 0; g < n; ++g)
        if (singleton[g]) classes.push_back(SpectralClass{{g}, g, {1}});

    // Multi-element classes S(eta) for eta in Gamma_{0,1} = {2 eta_i < m_i}.
    for_each_box(pv_.m, [&](const ivec& eta) {
        for (std::size_t j = 0; j < pv_.dim(); ++j)
            if (2 * eta[j] >= pv_.m[j]) return;
        // K(eta): coordinates maximizing eta_j/m_j (fraction compare by cross product).
        std::vector<std::size_t> K;
        for (std::size_t j = 0; j < pv_.dim(); ++j) {
            bool is_max = true;
            for (std::size_t l = 0; l < pv_.dim(); ++l)
                if (eta[j] * pv_.m[l] < eta[l] * pv_.m[j]) {
                    is_max = false;
                    break;
                }
            if (is_max) K.push_back(j);
        }
        SpectralClass cls;
        for (auto j : K) cls.members.push_back(pos.at(reflect(pv_, eta, j)));
        std::sort(cls.members.begin(), cls.members.end());
        cls.representative = pos.at(reflect(pv_, eta, K.back()));
        std::int64_t krep = kappa_of_gamma(pv_, sets_.gamma_bar[cls.representative]);
        for (auto g : cls.members) {
            std::int64_t kg = kappa_of_gamma(pv_, sets_.gamma_bar[g]);
            cls.signs.push_back(mod_floor(krep - kg, 2) == 0 ? 1 : -1);
        }
        classes.push_back(std::move(cls));
    });

    std::sort(classes.begin(), classes.end(), [&](const SpectralClass& a, const SpectralClass& b) {
        return sets_.gamma_bar[a.representative] < sets_.gamma_bar[b.representative];
    });

    class_of_.assign(n, npos);
    is_rep_.assign(n, 0);
    sign_to_rep_.assign(n, 1);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        for (std::size_t k = 0; k < classes[c].members.size(); ++k) {
            std::size_t g = classes[c].members[k];
            if (class_of_[g] != npos) throw std::logic_error("spectral classes overlap");
            class_of_[g] = c;
            sign_to_rep_[g] = classes[c].signs[k];
        }
        is_rep_[classes[c].representative] = 1;
        reps_.push_back(classes[c].representative);
    }
    for (std::size_t g = 0; g < n; ++g)
        if (class_of_[g] == npos) throw std::logic_error("spectral classes do not cover");
    std::sort(reps_.begin(), reps_.end());
    classes_ = std::move(classes);
}

std::size_t SpectralBasis::find(const ivec& gamma) const {
    auto it = std::lower_bound(sets_.gamma_bar.begin(), sets_.gamma_bar.end(), gamma);
    if (it == sets_.gamma_bar.end() || *it != gamma) return npos;
    return std::size_t(it - sets_.gamma_bar.begin());
}

int kappa_sign(const SpectralBasis& sb, const ivec& gamma, const ivec& gamma_prime) {
    std::size_t a = sb.find(gamma), b = sb.find(gamma_prime);
    if (a == SpectralBasis::npos || b == SpectralBasis::npos || sb.class_of(a) != sb.class_of(b))
        throw std::domain_error("kappa_sign: arguments are not in the same class");
    return sb.sign_to_representative(a) * sb.sign_to_representative(b);
}

}  // namespace lcheb
