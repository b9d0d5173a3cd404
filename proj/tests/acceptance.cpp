// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.
// Usage: acceptance --cli /path/to/cli-binary

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lcheb/discrete.hpp"
#include "lcheb/interp.hpp"
#include "lcheb/io.hpp"
#include "lcheb/lissajous.hpp"
#include "lcheb/nodes.hpp"
#include "lcheb/spectral.hpp"

using namespace lcheb;

namespace {

const std::vector<std::pair<ivec, ivec>> kSuite = {
    {{10, 5}, {0, 0}}, {{10, 5}, {0, 1}},    {{4, 4}, {0, 0}},
    {{4, 4}, {0, 1}},  {{5, 5}, {0, 0}},     {{5, 4, 2}, {0, 0, 1}},
    {{4, 4, 4}, {0, 0, 0}}, {{5, 6}, {0, 0}}, {{3, 4, 5}, {0, 0, 0}},
};

int failures = 0;

void report(int n, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << "criterion " << n << " (" << name << "): " << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!pass) ++failures;
}

// 1. Cardinalities: closed forms vs enumeration, spectral counts, class counts.
void criterion1() {
    bool ok = true;
    for (auto& [m, kappa] : kSuite) {
        ParamVec pv(m, kappa);
        for (int r = 0; r <= 1; ++r) {
            auto idx = enumerate_index_set(pv, r);
            ok = ok && cardinality_formula(pv, r) == std::int64_t(idx.size());
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pv.dim()); ++mask) {
                std::int64_t count = 0;
                for (auto& i : idx)
                    if (i.m_mask == mask) ++count;
                ok = ok && face_cardinality_formula(pv, mask, r) == count;
            }
        }
        SpectralBasis sb(pv);
        ok = ok && sb.sets().gamma_k0.size() == enumerate_index_set(pv, 0).size();
        ok = ok && sb.sets().gamma_k1.size() == enumerate_index_set(pv, 1).size();
        ok = ok && sb.classes().size() == enumerate_index_set(pv).size();
    }
    report(1, "cardinalities", ok);
}

// 2. Decoding map is onto I with fiber size 2^{#M}.
void criterion2() {
    bool ok = true;
    for (auto& [m, kappa] : kSuite) {
        ParamVec pv(m, kappa);
        if (pv.product() > 500) continue;
        SharpFlat sf = sharp_flat_decompose(m);
        NodeSet ns(pv);
        std::map<ivec, std::int64_t> fiber;
        std::int64_t hsize = 2 * product_vec(sf.m_sharp);
        for (auto& c : curve_family(pv, sf))
            for (std::int64_t l = 0; l < hsize; ++l) ++fiber[decode(pv, sf, l, c.rho).i];
        ok = ok && fiber.size() == ns.size();
        for (std::size_t k = 0; k < ns.size() && ok; ++k) {
            auto it = fiber.find(ns.indices()[k].i);
            ok = it != fiber.end() &&
                 it->second == (std::int64_t{1} << ns.indices()[k].face_size());
        }
    }
    report(2, "decoding map", ok);
}

// 3. Lissajous identities.
void criterion3() {
    bool ok = true;
    for (auto& [m, kappa] : kSuite) {
        ParamVec pv(m, kappa);
        SharpFlat sf = sharp_flat_decompose(m);
        std::int64_t hsize = 2 * product_vec(sf.m_sharp);
        auto fam = classify_curves(pv, sf);  // throws if closed forms disagree
        std::int64_t fix = 0;
        for (std::size_t k = 0; k < fam.curves.size(); ++k) {
            const auto& rho = fam.curves[k].rho;
            ok = ok && rho_dagger(pv, sf, rho_dagger(pv, sf, rho)) == rho;
            if (fam.classification[k].degenerate) ++fix;
        }
        ok = ok && fix == n_degenerate_formula(pv);
        ok = ok && fam.class_count == (product_vec(sf.m_flat) + fam.n_degenerate) / 2;
        for (int r = 0; r <= 1; ++r) {
            std::set<ivec> sampled, expected;
            for (auto& c : fam.curves)
                for (std::int64_t l = r; l < hsize; l += 2)
                    sampled.insert(sample_curve(c, pv, sf, l).i);
            for (auto& idx : enumerate_index_set(pv, r)) expected.insert(idx.i);
            ok = ok && sampled == expected;
        }
        if (m == ivec{10, 5} && kappa == ivec{0, 0})
            ok = ok && fam.n_degenerate == 1 && fam.class_count == 3;
    }
    report(3, "lissajous identities", ok);
}

// 4. Discrete orthogonality: Gram of representatives.
void criterion4() {
    bool ok = true;
    double worst = 0.0;
    for (auto& [m, kappa] : kSuite) {
        NodeSet ns(ParamVec(m, kappa));
        SpectralBasis sb(ns.params());
        std::vector<ivec> reps;
        for (auto g : sb.representatives()) reps.push_back(sb.gamma_bar()[g]);
        auto gram = gram_matrix(ns, reps);
        for (std::size_t a = 0; a < reps.size(); ++a)
            for (std::size_t b = 0; b < reps.size(); ++b) {
                double err = a == b ? std::abs(gram[a * reps.size() + b] -
                                               chi_norm_sq(sb, sb.representatives()[a]))
                                    : std::abs(gram[a * reps.size() + b]);
                worst = std::max(worst, err);
                ok = ok && err <= 1e-13;
            }
    }
    report(4, "discrete orthogonality", ok, "max deviation " + fmt17(worst));
}

// 5. Delta property of the fundamental polynomials.
void criterion5() {
    bool ok = true;
    double worst = 0.0;
    for (auto& [m, kappa] : kSuite) {
        NodeSet ns(ParamVec(m, kappa));
        SpectralBasis sb(ns.params());
        for (std::size_t a = 0; a < ns.size(); ++a)
            for (std::size_t b = 0; b < ns.size(); ++b) {
                double want = a == b ? 1.0 : 0.0;
                double lp =
                    ns.weight(a) * kernel_plain(sb, ns.points()[a], ns.points()[b]);
                double la =
                    ns.weight(a) * kernel_averaged(sb, ns.points()[a], ns.points()[b]);
                worst = std::max({worst, std::abs(lp - want), std::abs(la - want)});
            }
    }
    ok = worst <= 1e-9;
    report(5, "delta property", ok, "max deviation " + fmt17(worst));
}

// 6. DCT path vs inner-product path on random data.
void criterion6() {
    double worst = 0.0;
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (auto& [m, kappa] : kSuite) {
        NodeSet ns(ParamVec(m, kappa));
        SpectralBasis sb(ns.params());
        for (int rep = 0; rep < 20; ++rep) {
            std::vector<double> v(ns.size());
            for (auto& x : v) x = dist(rng);
            GridFunction h(ns, std::move(v));
            auto cd = coefficients_direct(ns, sb, h);
            auto cf = coefficients_dct(ns, sb, h);
            double scale = 1e-300;
            for (auto x : cd) scale = std::max(scale, std::abs(x));
            for (std::size_t g = 0; g < cd.size(); ++g)
                worst = std::max(worst, std::abs(cd[g] - cf[g]) / scale);
        }
    }
    report(6, "dual-path coefficients", worst <= 1e-10, "max rel " + fmt17(worst));
}

// 7. Quadrature on the basis, exact rational weight sum.
void criterion7() {
    bool ok = true;
    double worst = 0.0;
    for (auto& [m, kappa] : kSuite) {
        NodeSet ns(ParamVec(m, kappa));
        SpectralBasis sb(ns.params());
        ok = ok && weight_sum_is_one(ns);
        for (auto& gamma : sb.gamma_bar()) {
            double q = quadrature(ns, chi_on_nodes(ns, gamma));
            double want = e_count(gamma) == 0 ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(q - want));
        }
    }
    ok = ok && worst <= 1e-12;
    report(7, "quadrature", ok, "max deviation " + fmt17(worst));
}

// 8. Special-case regressions.
void criterion8() {
    bool ok = true;
    // Padua-like (5,6): 21 nodes, a single degenerate curve.
    {
        ParamVec pv = padua_like({5, 6}, {0, 0});
        ok = ok && NodeSet(pv).size() == 21;
        auto fam = classify_curves(pv, sharp_flat_decompose(pv.m));
        ok = ok && fam.curves.size() == 1 && fam.n_degenerate == 1 &&
             fam.classification[0].degenerate;
    }
    // MPX (4,4): 13 nodes, representatives = gamma_bar minus {(3,1),(4,0)}.
    {
        ParamVec pv = mpx(4, 2, {0, 0});
        ok = ok && NodeSet(pv).size() == 13;
        SpectralBasis sb(pv);
        std::set<ivec> reps;
        for (auto g : sb.representatives()) reps.insert(sb.gamma_bar()[g]);
        std::set<ivec> expected(sb.gamma_bar().begin(), sb.gamma_bar().end());
        expected.erase({3, 1});
        expected.erase({4, 0});
        ok = ok && reps == expected;
    }
    // MPX degenerate-count case table.
    ok = ok && n_degenerate_formula(ParamVec({4, 4}, {0, 0})) == 2;
    ok = ok && n_degenerate_formula(ParamVec({4, 4, 4}, {0, 0, 0})) == 4;
    ok = ok && n_degenerate_formula(ParamVec({4, 4}, {0, 1})) == 0;
    ok = ok && n_degenerate_formula(ParamVec({5, 5}, {0, 0})) == 1;
    ok = ok && n_degenerate_formula(ParamVec({5, 5}, {0, 1})) == 1;
    report(8, "special-case regressions", ok);
}

// 9. d=1 reduction vs an independent dense Vandermonde solve.
void criterion9() {
    double worst = 0.0;
    std::mt19937 rng(5150);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (std::int64_t m = 2; m <= 16; ++m) {
        ParamVec pv({m}, {0});
        NodeSet ns(pv);
        SpectralBasis sb(pv);
        const std::size_t n = ns.size();
        std::vector<double> h(n);
        for (auto& x : h) x = dist(rng);

        // Dense solve of sum_k c_k T_k(x_i) = h_i by Gaussian elimination.
        std::vector<double> A(n * (n + 1));
        for (std::size_t i = 0; i < n; ++i) {
            double x = ns.points()[i][0];
            double t0 = 1.0, t1 = x;
            for (std::size_t k = 0; k < n; ++k) {
                double tk = k == 0 ? 1.0 : (k == 1 ? x : 0.0);
                if (k >= 2) {
                    tk = 2.0 * x * t1 - t0;
                    t0 = t1;
                    t1 = tk;
                }
                A[i * (n + 1) + k] = tk;
            }
            A[i * (n + 1) + n] = h[i];
        }
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            for (std::size_t r = col + 1; r < n; ++r)
                if (std::abs(A[r * (n + 1) + col]) > std::abs(A[piv * (n + 1) + col])) piv = r;
            for (std::size_t c = 0; c <= n; ++c)
                std::swap(A[col * (n + 1) + c], A[piv * (n + 1) + c]);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col) continue;
                double f = A[r * (n + 1) + col] / A[col * (n + 1) + col];
                for (std::size_t c = col; c <= n; ++c) A[r * (n + 1) + c] -= f * A[col * (n + 1) + c];
            }
        }

        auto cc = interpolate(ns, sb, GridFunction(ns, h), Space::plain);
        for (std::size_t k = 0; k < n; ++k) {
            double dense = A[k * (n + 1) + n] / A[k * (n + 1) + k];
            std::size_t g = sb.find(ivec{std::int64_t(k)});
            worst = std::max(worst, std::abs(dense - cc.c[g]));
        }
    }
    report(9, "d=1 reduction", worst <= 1e-8, "max coeff err " + fmt17(worst));
}

// 10. CLI round trip.
std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void criterion10(const std::string& cli) {
    if (cli.empty()) {
        report(10, "cli round trip", false, "no --cli path given");
        return;
    }
    auto run = [&](const std::string& args) {
        return std::system(("\"" + cli + "\" " + args).c_str());
    };
    bool ok = run("nodes --m 10,5 --kappa 0,0 --out acc10_nodes.csv") == 0;

    // Sample f(x) = exp(x1) * prod_{j>=2} cos(x_j) at the nodes.
    if (ok) {
        std::ifstream in("acc10_nodes.csv");
        std::ofstream out("acc10_data.csv");
        out << "i_1,i_2,value\n";
        std::string line;
        std::getline(in, line);  // header
        while (std::getline(in, line)) {
            std::stringstream ss(line);
            std::string f;
            std::vector<std::string> fields;
            while (std::getline(ss, f, ',')) fields.push_back(f);
            if (fields.size() != 7) {
                ok = false;
                break;
            }
            double x1 = std::stod(fields[4]), x2 = std::stod(fields[5]);
            out << fields[0] << "," << fields[1] << ","
                << fmt17(std::exp(x1) * std::cos(x2)) << "\n";
        }
    }
    ok = ok &&
         run("interp --m 10,5 --kappa 0,0 --data acc10_data.csv --check --out acc10_c1.json") ==
             0 &&
         run("interp --m 10,5 --kappa 0,0 --data acc10_data.csv --check --out acc10_c2.json") ==
             0;
    double residual = 1.0;
    if (ok) {
        std::string c1 = slurp("acc10_c1.json"), c2 = slurp("acc10_c2.json");
        ok = !c1.empty() && c1 == c2;
        nlohmann::json j = nlohmann::json::parse(c1);
        residual = j.at("max_residual").get<double>();
        ok = ok && residual <= 1e-9;
    }
    report(10, "cli round trip", ok, "residual " + fmt17(residual));
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int a = 1; a + 1 < argc; ++a)
        if (std::string(argv[a]) == "--cli") cli = argv[a + 1];
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10(cli);
    if (failures) {
        std::cout << failures << " criterion(s) FAILED\n";
        return 1;
    }
    std::cout << "all 10 criteria passed\n";
    return 0;
}
