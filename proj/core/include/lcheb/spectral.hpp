#pragma once

#include <cstdint>
#include <vector>

#include "lcheb/arith.hpp"

namespace lcheb {

struct GammaSets {
    std::vector<ivec> gamma_k0;   // Gamma_{kappa,0}
    std::vector<ivec> gamma_k1;   // Gamma_{kappa,1}
    std::vector<ivec> gamma_o;    // Gamma^o (open set)
    std::vector<ivec> gamma_bar;  // closure, all sorted lexicographically
};

struct SpectralClass {
    std::vector<std::size_t> members;  // positions in gamma_bar, sorted
    std::size_t representative;        // position in gamma_bar
    std::vector<int> signs;            // sign member -> representative, aligned with members
};

/// Cached spectral data for one ParamVec: the sets, the class partition,
/// per-gamma class metadata, and the canonical representative list.
class SpectralBasis {
  public:
    explicit SpectralBasis(ParamVec pv);

    const ParamVec& params() const { return pv_; }
    const GammaSets& sets() const { return sets_; }
    const std::vector<ivec>& gamma_bar() const { return sets_.gamma_bar; }
    const std::vector<SpectralClass>& classes() const { return classes_; }

    /// Positions in gamma_bar of the canonical representatives, ascending.
    const std::vector<std::size_t>& representatives() const { return reps_; }

    std::size_t class_of(std::size_t g) const { return class_of_[g]; }
    bool is_representative(std::size_t g) const { return is_rep_[g]; }
    int sign_to_representative(std::size_t g) const { return sign_to_rep_[g]; }
    std::int64_t class_size(std::size_t g) const {
        return std::int64_t(classes_[class_of_[g]].members.size());
    }

    /// Position of gamma in gamma_bar, or npos.
    std::size_t find(const ivec& gamma) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  private:
    ParamVec pv_;
    GammaSets sets_;
    std::vector<SpectralClass> classes_;
    std::vector<std::size_t> reps_;
    std::vector<std::size_t> class_of_;
    std::vector<char> is_rep_;
    std::vector<int> sign_to_rep_;
};

GammaSets gamma_sets(const ParamVec& pv);

/// Reflection s_j(gamma): coordinate j replaced by m_j - gamma_j (0-based j).
ivec reflect(const ParamVec& pv, const ivec& gamma, std::size_t j);

/// (-1)^{kappa[gamma,gamma']} for two members of the same class.
int kappa_sign(const SpectralBasis& sb, const ivec& gamma, const ivec& gamma_prime);

int e_count(const ivec& gamma);
int f_count(const ParamVec& pv, const ivec& gamma);

/// True iff gcd(m_i, m_j) <= 2 for all pairs.
bool gcd_le2_criterion(const ParamVec& pv);

/// True iff gamma is a member of S(0): one coordinate equal to m_j, rest 0.
bool is_s0_member(const ParamVec& pv, const ivec& gamma);

}  // namespace lcheb
