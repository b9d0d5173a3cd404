#include "lcheb/arith.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace lcheb {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in product");
    return out;
}

std::int64_t product_vec(const ivec& k) {
    std::int64_t p = 1;
    for (auto v : k) p = checked_mul(p, v);
    return p;
}

std::int64_t gcd_vec(const ivec& k) {
    std::int64_t g = 0;
    for (auto v : k) g = std::gcd(g, v);
    return g;
}

std::int64_t lcm_vec(const ivec& k) {
    if (k.empty()) throw std::invalid_argument("lcm of empty sequence");
    std::int64_t l = 1;
    for (auto v : k) {
        if (v <= 0) throw std::invalid_argument("lcm requires positive entries");
        l = checked_mul(l / std::gcd(l, v), v);
    }
    return l;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

ParamVec::ParamVec(ivec m_, ivec kappa_) : m(std::move(m_)), kappa(std::move(kappa_)) {
    if (m.empty()) throw std::invalid_argument("dimension must be at least 1");
    if (kappa.size() != m.size())
        throw std::invalid_argument("m and kappa must have the same dimension");
    for (auto v : m)
        if (v < 1) throw std::invalid_argument("all m_i must be >= 1");
    // Fail construction if derived quantities overflow 64-bit range.
    checked_mul(2, product_vec(m));
    lcm_vec(m);
}

ParamVec::ParamVec(ivec m_) : ParamVec(m_, ivec(m_.size(), 0)) {}

std::int64_t ParamVec::product() const { return product_vec(m); }
std::int64_t ParamVec::lcm() const { return lcm_vec(m); }

std::int64_t crt_solve(const ivec& k, const ivec& a) {
    if (k.empty() || k.size() != a.size())
        throw std::invalid_argument("crt_solve: mismatched or empty input");
    for (std::size_t i = 0; i < k.size(); ++i)
        for (std::size_t j = i + 1; j < k.size(); ++j) {
            std::int64_t g = std::gcd(k[i], k[j]);
            if (mod_floor(a[i] - a[j], g) != 0)
                throw std::invalid_argument("crt_solve: incompatible residues at pair (" +
                                            std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                            ")");
        }
    // Sequential merge: maintain l = cur mod modl.
    std::int64_t cur = mod_floor(a[0], k[0]);
    std::int64_t modl = k[0];
    for (std::size_t i = 1; i < k.size(); ++i) {
        std::int64_t g = std::gcd(modl, k[i]);
        std::int64_t next_mod = checked_mul(modl / g, k[i]);
        // Find t with cur + modl*t = a_i mod k_i, i.e. t = (a_i-cur)/g * inv(modl/g) mod k_i/g.
        std::int64_t ki_g = k[i] / g;
        std::int64_t diff = mod_floor(a[i] - cur, k[i]) / g;
        // Modular inverse of (modl/g) mod ki_g by extended Euclid.
        std::int64_t x0 = 0, x1 = 1, r0 = ki_g, r1 = mod_floor(modl / g, ki_g == 0 ? 1 : ki_g);
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::int64_t tmp = r0 - q * r1;
            r0 = r1;
            r1 = tmp;
            tmp = x0 - q * x1;
            x0 = x1;
            x1 = tmp;
        }
        std::int64_t inv = ki_g == 0 ? 0 : mod_floor(x0, ki_g);
        std::int64_t t = ki_g == 0 ? 0 : mod_floor(checked_mul(diff % ki_g, inv), ki_g);
        cur = mod_floor(cur + checked_mul(modl, t), next_mod);
        modl = next_mod;
    }
    return cur;
}

namespace {

std::map<std::int64_t, int> factorize(std::int64_t n) {
    std::map<std::int64_t, int> out;
    for (std::int64_t p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    if (n > 1) ++out[n];
    return out;
}

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r = checked_mul(r, b);
    return r;
}

}  // namespace

SharpFlat sharp_flat_decompose(const ivec& m) {
    const std::size_t d = m.size();
    std::vector<std::map<std::int64_t, int>> fac(d);
    std::map<std::int64_t, int> maxexp;  // prime -> e(p), sorted by prime
    for (std::size_t i = 0; i < d; ++i) {
        fac[i] = factorize(m[i]);
        for (auto [p, e] : fac[i])
            if (e > maxexp[p]) maxexp[p] = e;
    }
    SharpFlat out{ivec(d, 1), ivec(d, 1)};
    for (auto [p, emax] : maxexp) {
        std::size_t j = d;  // smallest index achieving the maximal exponent
        for (std::size_t i = 0; i < d; ++i) {
            auto it = fac[i].find(p);
            int e = it == fac[i].end() ? 0 : it->second;
            if (e == emax) {
                j = i;
                break;
            }
        }
        for (std::size_t i = 0; i < d; ++i) {
            auto it = fac[i].find(p);
            int e = it == fac[i].end() ? 0 : it->second;
            if (e == 0) continue;
            if (i == j)
                out.m_sharp[i] = checked_mul(out.m_sharp[i], ipow(p, e));
            else
                out.m_flat[i] = checked_mul(out.m_flat[i], ipow(p, e));
        }
    }
    return out;
}

bool validate_sharp_flat(const ivec& m, const SharpFlat& cand) {
    const std::size_t d = m.size();
    if (cand.m_sharp.size() != d || cand.m_flat.size() != d) return false;
    std::int64_t prod_sharp = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (cand.m_sharp[i] < 1 || cand.m_flat[i] < 1) return false;
        if (checked_mul(cand.m_sharp[i], cand.m_flat[i]) != m[i]) return false;       // (a)
        if (std::gcd(cand.m_sharp[i], cand.m_flat[i]) != 1) return false;             // (b)
        for (std::size_t j = i + 1; j < d; ++j)
            if (std::gcd(cand.m_sharp[i], cand.m_sharp[j]) != 1) return false;        // (c)
        prod_sharp = checked_mul(prod_sharp, cand.m_sharp[i]);
    }
    return prod_sharp == lcm_vec(m);  // (d)
}

}  // namespace lcheb
