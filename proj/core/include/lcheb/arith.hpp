#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lcheb {

using ivec = std::vector<std::int64_t>;

/// Frequency vector m and shift vector kappa defining a node family.
/// Construction checks that p[m] and lcm[m] fit into signed 64-bit range.
struct ParamVec {
    ivec m;
    ivec kappa;

    ParamVec(ivec m_, ivec kappa_);

    /// Convenience: kappa = 0.
    explicit ParamVec(ivec m_);

    std::size_t dim() const { return m.size(); }
    std::int64_t product() const;  // p[m]
    std::int64_t lcm() const;      // lcm[m]
};

/// Multiplicative decomposition m_i = m_flat_i * m_sharp_i with
/// pairwise coprime m_sharp and lcm[m] = prod(m_sharp).
struct SharpFlat {
    ivec m_sharp;
    ivec m_flat;
};

std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t gcd_vec(const ivec& k);
std::int64_t lcm_vec(const ivec& k);
std::int64_t product_vec(const ivec& k);

/// Euclidean remainder in [0, n).
std::int64_t mod_floor(std::int64_t a, std::int64_t n);

/// Solves l = a_i mod k_i for all i, with l in {0,...,lcm[k]-1}.
/// Throws std::invalid_argument naming the first incompatible pair (i,j)
/// with a_i != a_j mod gcd(k_i,k_j).
std::int64_t crt_solve(const ivec& k, const ivec& a);

/// Recursive sharp/flat construction: primes in increasing order, the
/// coordinate achieving the maximal exponent with the smallest index
/// absorbs the full prime power into m_sharp.
SharpFlat sharp_flat_decompose(const ivec& m);

/// True iff cand satisfies all four decomposition properties for m.
bool validate_sharp_flat(const ivec& m, const SharpFlat& cand);

}  // namespace lcheb
