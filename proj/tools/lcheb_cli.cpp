#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
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

struct Job {
    std::vector<std::int64_t> m;
    std::vector<std::int64_t> kappa;
    std::string out_path;
    std::string format = "csv";
    std::string space = "plain";
    std::string data_path;
    std::string coeffs_path;
    std::string points_path;
    bool check = false;
};

ParamVec make_params(const Job& job) {
    ivec kappa = job.kappa;
    if (kappa.empty()) kappa.assign(job.m.size(), 0);
    if (kappa.size() != job.m.size())
        throw std::invalid_argument("--m and --kappa must have the same dimension");
    return ParamVec(job.m, kappa);
}

void emit(const Job& job, const std::string& text) {
    if (job.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(job.out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file " + job.out_path);
    f << text;
}

std::string join_ints(const ivec& v) {
    std::string s;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j) s += ',';
        s += std::to_string(v[j]);
    }
    return s;
}

std::string json_int_array(const ivec& v) { return "[" + join_ints(v) + "]"; }

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open input file " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(f, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        rows.push_back(split_csv_line(line));
    }
    return rows;
}

// ---------------------------------------------------------------- nodes

std::string nodes_csv(const NodeSet& ns) {
    const std::size_t d = ns.params().dim();
    std::string out;
    for (std::size_t j = 1; j <= d; ++j) out += "i_" + std::to_string(j) + ",";
    out += "r,M_bitmask,";
    for (std::size_t j = 1; j <= d; ++j) out += "x_" + std::to_string(j) + ",";
    out += "weight\n";
    for (std::size_t k = 0; k < ns.size(); ++k) {
        const auto& idx = ns.indices()[k];
        for (std::size_t j = 0; j < d; ++j) out += std::to_string(idx.i[j]) + ",";
        out += std::to_string(idx.r) + "," + std::to_string(idx.m_mask) + ",";
        for (std::size_t j = 0; j < d; ++j) out += fmt17(ns.points()[k][j]) + ",";
        out += fmt17(ns.weight(k)) + "\n";
    }
    return out;
}

std::string nodes_json(const NodeSet& ns) {
    std::string out = "{\n  \"m\": " + json_int_array(ns.params().m) +
                      ",\n  \"kappa\": " + json_int_array(ns.params().kappa) +
                      ",\n  \"nodes\": [\n";
    for (std::size_t k = 0; k < ns.size(); ++k) {
        const auto& idx = ns.indices()[k];
        out += "    {\"i\": " + json_int_array(idx.i) + ", \"r\": " + std::to_string(idx.r) +
               ", \"M_bitmask\": " + std::to_string(idx.m_mask) + ", \"x\": [";
        for (std::size_t j = 0; j < ns.params().dim(); ++j) {
            if (j) out += ", ";
            out += fmt17(ns.points()[k][j]);
        }
        out += "], \"weight\": " + fmt17(ns.weight(k)) + "}";
        out += k + 1 < ns.size() ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

int cmd_nodes(const Job& job) {
    NodeSet ns(make_params(job));
    emit(job, job.format == "json" ? nodes_json(ns) : nodes_csv(ns));
    return 0;
}

// ---------------------------------------------------------------- curves

int cmd_curves(const Job& job) {
    ParamVec pv = make_params(job);
    SharpFlat sf = sharp_flat_decompose(pv.m);
    CurveFamily fam = classify_curves(pv, sf);
    std::string out = "{\n  \"m\": " + json_int_array(pv.m) +
                      ",\n  \"kappa\": " + json_int_array(pv.kappa) +
                      ",\n  \"m_sharp\": " + json_int_array(sf.m_sharp) +
                      ",\n  \"m_flat\": " + json_int_array(sf.m_flat) +
                      ",\n  \"n_degenerate\": " + std::to_string(fam.n_degenerate) +
                      ",\n  \"class_count\": " + std::to_string(fam.class_count) +
                      ",\n  \"curves\": [\n";
    for (std::size_t k = 0; k < fam.curves.size(); ++k) {
        const auto& c = fam.curves[k];
        const auto& cl = fam.classification[k];
        out += "    {\"rho\": " + json_int_array(c.rho) + ", \"xi\": " + json_int_array(c.xi) +
               ", \"degenerate\": " + (cl.degenerate ? "true" : "false") +
               ", \"partner_rho\": " + json_int_array(cl.partner) +
               ", \"class_id\": " + std::to_string(cl.class_id) + "}";
        out += k + 1 < fam.curves.size() ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    emit(job, out);
    return 0;
}

// ---------------------------------------------------------------- gamma

int cmd_gamma(const Job& job) {
    ParamVec pv = make_params(job);
    SpectralBasis sb(pv);
    auto member = [](const std::vector<ivec>& set, const ivec& g) {
        return std::binary_search(set.begin(), set.end(), g);
    };
    std::string out = "{\n  \"m\": " + json_int_array(pv.m) +
                      ",\n  \"kappa\": " + json_int_array(pv.kappa) +
                      ",\n  \"entries\": [\n";
    const auto& bar = sb.gamma_bar();
    for (std::size_t g = 0; g < bar.size(); ++g) {
        out += "    {\"gamma\": " + json_int_array(bar[g]) +
               ", \"in_gamma_kappa0\": " + (member(sb.sets().gamma_k0, bar[g]) ? "true" : "false") +
               ", \"in_gamma_kappa1\": " + (member(sb.sets().gamma_k1, bar[g]) ? "true" : "false") +
               ", \"in_gamma_open\": " + (member(sb.sets().gamma_o, bar[g]) ? "true" : "false") +
               ", \"class_id\": " + std::to_string(sb.class_of(g)) +
               ", \"is_representative\": " + (sb.is_representative(g) ? "true" : "false") +
               ", \"sign_to_representative\": " + std::to_string(sb.sign_to_representative(g)) +
               ", \"e\": " + std::to_string(e_count(bar[g])) +
               ", \"f\": " + std::to_string(f_count(pv, bar[g])) + "}";
        out += g + 1 < bar.size() ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    emit(job, out);
    return 0;
}

// ---------------------------------------------------------------- interp / quad data

GridFunction read_data_csv(const NodeSet& ns, const std::string& path) {
    auto rows = read_csv(path);
    const std::size_t d = ns.params().dim();
    if (rows.empty() || rows[0].size() != d + 1)
        throw std::invalid_argument("data file must have header i_1..i_d,value");
    std::vector<double> values(ns.size());
    std::vector<int> seen(ns.size(), 0);
    std::string missing, duplicate, unknown;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() != d + 1)
            throw std::invalid_argument("malformed data row " + std::to_string(r + 1));
        ivec i(d);
        for (std::size_t j = 0; j < d; ++j) i[j] = std::stoll(rows[r][j]);
        std::size_t k = ns.find(i);
        if (k == NodeSet::npos) {
            unknown += " (" + join_ints(i) + ")";
            continue;
        }
        if (seen[k]++) duplicate += " (" + join_ints(i) + ")";
        values[k] = std::stod(rows[r][d]);
    }
    for (std::size_t k = 0; k < ns.size(); ++k)
        if (!seen[k]) missing += " (" + join_ints(ns.indices()[k].i) + ")";
    if (!missing.empty() || !duplicate.empty() || !unknown.empty()) {
        std::string msg = "data file does not cover the index set exactly.";
        if (!missing.empty()) msg += " missing:" + missing;
        if (!duplicate.empty()) msg += " duplicate:" + duplicate;
        if (!unknown.empty()) msg += " unknown:" + unknown;
        throw std::invalid_argument(msg);
    }
    return GridFunction(ns, std::move(values));
}

std::string coeffs_json(const ChebCoeffs& cc, double max_residual, bool with_residual) {
    std::string out = "{\n  \"m\": " + json_int_array(cc.pv.m) +
                      ",\n  \"kappa\": " + json_int_array(cc.pv.kappa) +
                      ",\n  \"space\": \"" + space_name(cc.space) + "\"";
    if (with_residual) out += ",\n  \"max_residual\": " + fmt17(max_residual);
    out += ",\n  \"entries\": [\n";
    for (std::size_t g = 0; g < cc.gamma.size(); ++g) {
        out += "    {\"gamma\": " + json_int_array(cc.gamma[g]) + ", \"c\": " + fmt17(cc.c[g]) +
               "}";
        out += g + 1 < cc.gamma.size() ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

int cmd_interp(const Job& job) {
    ParamVec pv = make_params(job);
    NodeSet ns(pv);
    SpectralBasis sb(pv);
    GridFunction h = read_data_csv(ns, job.data_path);
    ChebCoeffs cc = interpolate(ns, sb, h, parse_space(job.space));
    double res = job.check ? interpolation_residual(ns, cc, h) : 0.0;
    emit(job, coeffs_json(cc, res, job.check));
    return 0;
}

ChebCoeffs read_coeffs_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open coefficients file " + path);
    nlohmann::json j = nlohmann::json::parse(f);
    ParamVec pv(j.at("m").get<ivec>(), j.at("kappa").get<ivec>());
    SpectralBasis sb(pv);
    ChebCoeffs cc{pv, parse_space(j.at("space").get<std::string>()), sb.gamma_bar(), {}, {}};
    cc.c.assign(cc.gamma.size(), 0.0);
    cc.class_size.resize(cc.gamma.size());
    for (std::size_t g = 0; g < cc.gamma.size(); ++g) cc.class_size[g] = sb.class_size(g);
    for (const auto& e : j.at("entries")) {
        std::size_t g = sb.find(e.at("gamma").get<ivec>());
        if (g == SpectralBasis::npos)
            throw std::invalid_argument("coefficient entry outside the spectral set");
        cc.c[g] = e.at("c").get<double>();
    }
    return cc;
}

int cmd_eval(const Job& job) {
    ChebCoeffs cc = read_coeffs_json(job.coeffs_path);
    auto rows = read_csv(job.points_path);
    const std::size_t d = cc.pv.dim();
    if (rows.empty() || rows[0].size() != d)
        throw std::invalid_argument("points file must have header x_1..x_d");
    std::string out;
    for (std::size_t j = 1; j <= d; ++j) out += "x_" + std::to_string(j) + ",";
    out += "value\n";
    for (std::size_t r = 1; r < rows.size(); ++r) {
        std::vector<double> x(d);
        for (std::size_t j = 0; j < d; ++j) x[j] = std::stod(rows[r][j]);
        for (std::size_t j = 0; j < d; ++j) out += fmt17(x[j]) + ",";
        out += fmt17(cc.evaluate(x)) + "\n";
    }
    emit(job, out);
    return 0;
}

int cmd_quad(const Job& job) {
    ParamVec pv = make_params(job);
    NodeSet ns(pv);
    GridFunction h = read_data_csv(ns, job.data_path);
    std::string out = "{\n  \"m\": " + json_int_array(pv.m) +
                      ",\n  \"kappa\": " + json_int_array(pv.kappa) +
                      ",\n  \"value\": " + fmt17(quadrature(ns, h)) + "\n}\n";
    emit(job, out);
    return 0;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Job& job) {
    ParamVec pv = make_params(job);
    NodeSet ns(pv);
    SharpFlat sf = sharp_flat_decompose(pv.m);
    SpectralBasis sb(pv);
    std::string report;
    bool ok = true;
    auto check = [&](const std::string& name, bool pass, const std::string& detail = "") {
        report += name + ": " + (pass ? "pass" : "FAIL");
        if (!detail.empty()) report += " (" + detail + ")";
        report += "\n";
        ok = ok && pass;
    };

    report += "decomposition: m_sharp=(" + join_ints(sf.m_sharp) + ") m_flat=(" +
              join_ints(sf.m_flat) + ")\n";
    check("sharp-flat properties", validate_sharp_flat(pv.m, sf));

    // Cardinalities: closed forms against enumeration.
    bool card_ok = true;
    for (int r = 0; r <= 1; ++r)
        card_ok = card_ok &&
                  cardinality_formula(pv, r) ==
                      std::int64_t(enumerate_index_set(pv, r).size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pv.dim()); ++mask)
        for (int r = 0; r <= 1; ++r) {
            std::int64_t count = 0;
            for (const auto& idx : enumerate_index_set(pv, r))
                if (idx.m_mask == mask) ++count;
            card_ok = card_ok && count == face_cardinality_formula(pv, mask, r);
        }
    check("cardinality formulas", card_ok);
    check("spectral counts",
          sb.sets().gamma_k0.size() == enumerate_index_set(pv, 0).size() &&
              sb.sets().gamma_k1.size() == enumerate_index_set(pv, 1).size() &&
              sb.classes().size() == ns.size());

    // Decoding map fibers.
    if (pv.product() <= 500) {
        std::map<ivec, std::int64_t> fiber;
        std::int64_t hsize = 2 * product_vec(sf.m_sharp);
        CurveFamily fam0 = classify_curves(pv, sf);
        for (const auto& c : fam0.curves)
            for (std::int64_t l = 0; l < hsize; ++l) ++fiber[decode(pv, sf, l, c.rho).i];
        bool fiber_ok = fiber.size() == ns.size();
        for (std::size_t k = 0; k < ns.size(); ++k) {
            auto it = fiber.find(ns.indices()[k].i);
            fiber_ok = fiber_ok && it != fiber.end() &&
                       it->second == (std::int64_t{1} << ns.indices()[k].face_size());
        }
        check("decode fiber sizes", fiber_ok);
    }

    // Curve family identities.
    CurveFamily fam = classify_curves(pv, sf);
    bool invol_ok = true, sample_ok = true;
    std::int64_t hsize = 2 * product_vec(sf.m_sharp);
    for (std::size_t k = 0; k < fam.curves.size(); ++k) {
        invol_ok = invol_ok &&
                   rho_dagger(pv, sf, fam.classification[k].partner) == fam.curves[k].rho;
        for (std::int64_t l = 0; l < hsize && sample_ok; ++l) {
            NodeIndex idx = sample_curve(fam.curves[k], pv, sf, l);
            sample_ok = ns.find(idx.i) != NodeSet::npos && idx.r == int(mod_floor(l, 2));
        }
    }
    check("rho-dagger involution", invol_ok);
    check("curve sampling lands on nodes", sample_ok);
    report += "curves: " + std::to_string(fam.curves.size()) + ", degenerate " +
              std::to_string(fam.n_degenerate) + ", classes " +
              std::to_string(fam.class_count) + "\n";

    double vres = 0.0;
    for (const auto& c : fam.curves)
        for (std::int64_t l = 0; l < hsize; ++l)
            vres = std::max(vres, variety_residual(pv, sample_curve_point(c, pv, l)));
    check("variety residual on curves", vres <= 1e-10, "max " + fmt17(vres));

    check("weight sum is 1 (rational)", weight_sum_is_one(ns));

    // Gram matrix of representatives.
    std::vector<ivec> reps;
    for (auto g : sb.representatives()) reps.push_back(sb.gamma_bar()[g]);
    auto gram = gram_matrix(ns, reps);
    double offdiag = 0.0, diag_err = 0.0;
    for (std::size_t a = 0; a < reps.size(); ++a)
        for (std::size_t b = 0; b < reps.size(); ++b) {
            if (a == b)
                diag_err = std::max(diag_err,
                                    std::abs(gram[a * reps.size() + b] -
                                             chi_norm_sq(sb, sb.representatives()[a])));
            else
                offdiag = std::max(offdiag, std::abs(gram[a * reps.size() + b]));
        }
    check("gram diagonal", diag_err <= 1e-13, "max err " + fmt17(diag_err));
    check("gram off-diagonal", offdiag <= 1e-13, "max " + fmt17(offdiag));

    // Delta property of both fundamental systems.
    double delta_err = 0.0;
    for (std::size_t a = 0; a < ns.size(); ++a)
        for (std::size_t b = 0; b < ns.size(); ++b) {
            double want = a == b ? 1.0 : 0.0;
            double lp = ns.weight(a) * kernel_plain(sb, ns.points()[a], ns.points()[b]);
            double la = ns.weight(a) * kernel_averaged(sb, ns.points()[a], ns.points()[b]);
            delta_err = std::max({delta_err, std::abs(lp - want), std::abs(la - want)});
        }
    check("fundamental delta property", delta_err <= 1e-9, "max " + fmt17(delta_err));

    // Dual-path coefficients on random data.
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    double dual_err = 0.0;
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<double> v(ns.size());
        for (auto& x : v) x = dist(rng);
        GridFunction h(ns, std::move(v));
        auto cd = coefficients_direct(ns, sb, h);
        auto cf = coefficients_dct(ns, sb, h);
        double scale = 0.0;
        for (auto x : cd) scale = std::max(scale, std::abs(x));
        for (std::size_t g = 0; g < cd.size(); ++g)
            dual_err = std::max(dual_err, std::abs(cd[g] - cf[g]) / scale);
    }
    check("dct path matches inner products", dual_err <= 1e-10, "max rel " + fmt17(dual_err));

    // Quadrature on the basis.
    double quad_err = 0.0;
    for (std::size_t g = 0; g < sb.gamma_bar().size(); ++g) {
        double q = quadrature(ns, chi_on_nodes(ns, sb.gamma_bar()[g]));
        double want = e_count(sb.gamma_bar()[g]) == 0 ? 1.0 : 0.0;
        quad_err = std::max(quad_err, std::abs(q - want));
    }
    check("quadrature on basis", quad_err <= 1e-12, "max " + fmt17(quad_err));

    report += ok ? "all invariants pass\n" : "verification FAILED\n";
    emit(job, report);
    return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lissajous-Chebyshev node sets, interpolation and quadrature"};
    app.require_subcommand(1);
    Job job;

    auto add_common = [&](CLI::App* sub, bool needs_m) {
        auto* m = sub->add_option("--m", job.m, "frequency vector, comma separated")
                      ->delimiter(',');
        if (needs_m) m->required();
        sub->add_option("--kappa", job.kappa, "shift vector, comma separated")->delimiter(',');
        sub->add_option("--out", job.out_path, "write output to file instead of stdout");
        sub->add_option("--format", job.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    auto* nodes = app.add_subcommand("nodes", "emit the node set");
    add_common(nodes, true);
    auto* curves = app.add_subcommand("curves", "emit the generating curve family");
    add_common(curves, true);
    auto* gamma = app.add_subcommand("gamma", "emit the spectral index sets");
    add_common(gamma, true);
    auto* interp = app.add_subcommand("interp", "interpolate tabulated node data");
    add_common(interp, true);
    interp->add_option("--data", job.data_path, "CSV with header i_1..i_d,value")->required();
    interp->add_option("--space", job.space, "polynomial space")
        ->check(CLI::IsMember({"plain", "averaged"}));
    interp->add_flag("--check", job.check, "re-evaluate at the nodes and report max residual");
    auto* eval = app.add_subcommand("eval", "evaluate a coefficient file at points");
    eval->add_option("--coeffs", job.coeffs_path, "coefficient JSON")->required();
    eval->add_option("--points", job.points_path, "CSV with header x_1..x_d")->required();
    eval->add_option("--out", job.out_path, "write output to file instead of stdout");
    auto* quad = app.add_subcommand("quad", "quadrature of tabulated node data");
    add_common(quad, true);
    quad->add_option("--data", job.data_path, "CSV with header i_1..i_d,value")->required();
    auto* verify = app.add_subcommand("verify", "run the invariant suite for one (m,kappa)");
    add_common(verify, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (nodes->parsed()) return cmd_nodes(job);
        if (curves->parsed()) return cmd_curves(job);
        if (gamma->parsed()) return cmd_gamma(job);
        if (interp->parsed()) return cmd_interp(job);
        if (eval->parsed()) return cmd_eval(job);
        if (quad->parsed()) return cmd_quad(job);
        if (verify->parsed()) return cmd_verify(job);
    } catch (const std::overflow_error& e) {
        std::cerr << "arithmetic error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
