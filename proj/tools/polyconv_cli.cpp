// Command-line surface over the library: classification of the cubic
// family, plane invariants and the three-plane decider, index computation,
// boundary-curve and subharmonicity analysis, separation certificates,
// parameter sweeps and cubic factorization.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "polyconv/analysis.hpp"
#include "polyconv/certify.hpp"
#include "polyconv/convexity.hpp"
#include "polyconv/errors.hpp"
#include "polyconv/family.hpp"
#include "polyconv/invariants.hpp"
#include "polyconv/json_io.hpp"
#include "polyconv/parallel.hpp"
#include "polyconv/planes.hpp"

namespace pc = polyconv;
using pc::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitComputation = 3;
constexpr int kExitUnknownStrict = 4;

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

[[noreturn]] void fail(const std::string& code, const std::string& message,
                       const json& data = json::object()) {
    json err{{"error", code}, {"message", message}};
    if (!data.empty()) err["data"] = data;
    std::cerr << err.dump() << "\n";
    std::exit(kExitComputation);
}

pc::cxd parse_complex(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        return {std::stod(s), 0.0};
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

// Coefficient grammar: comma-separated entries. Tag entries z2zb:v,
// zzb2:v, zb3:v set the degree-3 family monomials; the generic entry
// m,n:re,im sets an arbitrary term.
pc::HermitianPoly parse_poly_spec(const std::string& spec) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : spec) {
        if (ch == ',') {
            tokens.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    tokens.push_back(cur);

    pc::HermitianPoly p;
    auto is_tag = [](const std::string& t) { return t == "z2zb" || t == "zzb2" || t == "zb3"; };
    for (size_t i = 0; i < tokens.size(); ++i) {
        const auto colon = tokens[i].find(':');
        if (colon == std::string::npos)
            throw pc::InvalidParameter("bad coefficient entry near '" + tokens[i] + "'");
        const std::string head = tokens[i].substr(0, colon);
        const std::string tail = tokens[i].substr(colon + 1);
        if (is_tag(head)) {
            const double v = std::stod(tail);
            if (head == "z2zb") p.add(2, 1, v);
            if (head == "zzb2") p.add(1, 2, v);
            if (head == "zb3") p.add(0, 3, v);
        } else {
            // Generic form m,n:re,im spans three comma-separated tokens.
            if (i == 0 || i + 1 >= tokens.size())
                throw pc::InvalidParameter("generic entry must look like m,n:re,im");
            const int m = std::stoi(tokens[i - 1]);
            const int n = std::stoi(head);
            const double re = std::stod(tail);
            const double im = std::stod(tokens[i + 1]);
            p.add(m, n, pc::cxd(re, im));
            ++i;
        }
    }
    return p;
}

int finish_verdict(const pc::ConvexityVerdict& v, bool strict) {
    return strict && v.status == pc::Status::Unknown ? kExitUnknownStrict : kExitOk;
}

void print_classification_text(const pc::FamilyClassification& fc) {
    std::cout << "surface: " << pc::to_string(fc.surface_kind) << "  t = " << fmt17(fc.t) << "\n";
    std::cout << "status: " << pc::to_string(fc.verdict.status);
    if (!fc.verdict.criterion.empty()) std::cout << "  [" << fc.verdict.criterion << "]";
    std::cout << "\n";
    if (fc.maslov_index)
        std::cout << "maslov index: " << *fc.maslov_index << "\n";
    else
        std::cout << "maslov index: undefined\n";
    std::cout << "thresholds: sqrt3/2 = " << fmt17(fc.thresholds.sqrt3_over_2)
              << ", star = " << fmt17(fc.thresholds.star) << "\n";
    if (!fc.verdict.note.empty()) std::cout << "note: " << fc.verdict.note << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"local polynomial convexity toolkit for totally-real plane "
                 "unions and the cubic CR-singular family"};
    app.require_subcommand(1);
    bool strict = false;
    bool as_json = false;
    app.add_flag("--strict", strict, "exit 4 when the final verdict is Unknown");
    app.add_flag("--json", as_json, "emit JSON on stdout");

    // classify
    auto* classify = app.add_subcommand("classify", "classify the family surface at parameter t");
    double cl_t = 0;
    std::string cl_surface = "cubic";
    classify->add_option("--t", cl_t, "family parameter t > 0")->required();
    classify->add_option("--surface", cl_surface, "cubic|perturbed")
        ->check(CLI::IsMember({"cubic", "perturbed"}));

    // planes
    auto* planes_cmd = app.add_subcommand("planes", "invariants and decider for a plane pair");
    std::string pl_file;
    double pl_t = 0;
    planes_cmd->add_option("--matrices", pl_file, "JSON file with a1, a2 matrices");
    planes_cmd->add_option("--t", pl_t, "use the family matrices at parameter t");

    // maslov
    auto* maslov = app.add_subcommand("maslov", "index of a homogeneous graph singularity");
    std::string ms_poly;
    std::string ms_method = "algebraic";
    double ms_radius = 1.0;
    int ms_samples = 4096;
    maslov->add_option("--poly", ms_poly, "coefficient spec")->required();
    maslov->add_option("--method", ms_method, "algebraic|winding|both")
        ->check(CLI::IsMember({"algebraic", "winding", "both"}));
    maslov->add_option("--radius", ms_radius, "circle radius for the winding method");
    maslov->add_option("--samples", ms_samples, "samples for the winding method");

    // curve
    auto* curve = app.add_subcommand("curve", "boundary-curve coincidence analysis");
    double cv_t = 0;
    int cv_samples = pc::default_tolerances().curve_default_samples;
    int cv_j = 2;
    std::string cv_csv;
    curve->add_option("--t", cv_t, "family parameter")->required();
    curve->add_option("--samples", cv_samples, "number of circle samples");
    curve->add_option("--j", cv_j, "index used in the segment-length threshold");
    curve->add_option("--emit-csv", cv_csv, "write theta,re_C,im_C samples to this path");

    // subharmonic
    auto* subh = app.add_subcommand("subharmonic", "Laplacian of Re(p_t / z^{j-1}) on a polar grid");
    double sh_t = 0;
    int sh_j = 0;
    int sh_radii = 8;
    int sh_angles = 720;
    subh->add_option("--t", sh_t, "family parameter")->required();
    subh->add_option("--j", sh_j, "divisor exponent j >= 1")->required();
    subh->add_option("--radii", sh_radii, "number of grid radii in [1/2, 2]");
    subh->add_option("--angles", sh_angles, "number of grid angles");

    // kallin
    auto* kallin = app.add_subcommand("kallin", "sampling check of a separation certificate");
    std::string ka_case;
    double ka_t = 0;
    bool ka_t_set = false;
    int ka_samples = 10000;
    double ka_radius = 1.0;
    std::string ka_file;
    kallin->add_option("--case", ka_case,
                       "sum_of_squares_t31|sum_of_squares_t32|product_zw_t33|linear_s1")
        ->required();
    kallin->add_option("--t", ka_t, "instantiate from the family matrices at t")
        ->each([&](const std::string&) { ka_t_set = true; });
    kallin->add_option("--samples", ka_samples, "sample count");
    kallin->add_option("--ball-radius", ka_radius, "parameter ball radius");
    kallin->add_option("--matrices", ka_file, "JSON file with a1, a2 matrices");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "classify over a t range and detect band edges");
    double sw_min = 0, sw_max = 0, sw_step = 0;
    std::string sw_out;
    std::string sw_surface = "cubic";
    sweep->add_option("--t-min", sw_min)->required();
    sweep->add_option("--t-max", sw_max)->required();
    sweep->add_option("--step", sw_step)->required();
    sweep->add_option("--out", sw_out, "write the report to this path instead of stdout");
    sweep->add_option("--surface", sw_surface, "cubic|perturbed")
        ->check(CLI::IsMember({"cubic", "perturbed"}));

    // factor
    auto* factor = app.add_subcommand("factor", "three-plane preimage of an admissible cubic");
    std::string fa_a1, fa_a2, fa_a3;
    factor->add_option("--a1", fa_a1, "complex as re,im")->required();
    factor->add_option("--a2", fa_a2, "complex as re,im")->required();
    factor->add_option("--a3", fa_a3, "complex as re,im")->required();

    // Let --json / --strict appear after the subcommand name as well.
    for (auto* sub : {classify, planes_cmd, maslov, curve, subh, kallin, sweep, factor})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*classify) {
            const auto fc = cl_surface == "cubic" ? pc::classify_cubic_surface(cl_t)
                                                  : pc::classify_perturbed_surface(cl_t);
            if (as_json)
                print_json(pc::to_json(fc));
            else
                print_classification_text(fc);
            return finish_verdict(fc.verdict, strict);
        }

        if (*planes_cmd) {
            pc::Mat2 a1, a2;
            if (!pl_file.empty()) {
                std::ifstream in(pl_file);
                if (!in) fail("io_error", "cannot open " + pl_file);
                json j = json::parse(in);
                a1 = pc::mat2_from_json(j.at("a1"));
                a2 = pc::mat2_from_json(j.at("a2"));
            } else if (planes_cmd->count("--t")) {
                std::tie(a1, a2) = pc::family_matrices(pl_t);
            } else {
                fail("invalid_parameter", "planes needs --matrices or --t");
            }
            const auto report = pc::compute_invariants(a1, a2);
            const auto verdict = pc::three_plane_decider(a1, a2);
            if (as_json) {
                print_json(json{{"invariants", pc::to_json(report)},
                                {"verdict", pc::to_json(verdict)}});
            } else {
                std::cout << "det A1 = " << fmt17(report.det_a1)
                          << "  det A2 = " << fmt17(report.det_a2) << "\n";
                std::cout << "tr A1 = " << fmt17(report.tr_a1) << "  tr A2 = " << fmt17(report.tr_a2)
                          << "\n";
                std::cout << "tr A1A2 = " << fmt17(report.tr_a1a2)
                          << "  det [A1,A2] = " << fmt17(report.det_commutator) << "\n";
                std::cout << "theta_12 = " << fmt17(report.theta_12)
                          << "  theta_21 = " << fmt17(report.theta_21) << "\n";
                std::cout << "lambda = " << fmt17(report.lambda_) << "  beta = " << fmt17(report.beta_)
                          << "  in_omega = " << (report.in_omega ? "true" : "false") << "\n";
                std::cout << "verdict: " << pc::to_string(verdict.status);
                if (!verdict.criterion.empty()) std::cout << "  [" << verdict.criterion << "]";
                std::cout << "\n";
            }
            return finish_verdict(verdict, strict);
        }

        if (*maslov) {
            const pc::HermitianPoly p = parse_poly_spec(ms_poly);
            json out = json::object();
            if (ms_method == "algebraic" || ms_method == "both")
                out["algebraic"] = pc::maslov_index_algebraic(p);
            if (ms_method == "winding" || ms_method == "both")
                out["winding"] = pc::maslov_index_winding(p, ms_radius, ms_samples);
            if (as_json) {
                print_json(out);
            } else {
                for (const auto& [k, v] : out.items())
                    std::cout << k << ": " << v.get<int>() << "\n";
            }
            return kExitOk;
        }

        if (*curve) {
            const auto p = pc::family_poly(cv_t);
            const auto res = pc::curve_analysis(p, cv_j, cv_samples);
            if (!cv_csv.empty()) {
                std::ofstream out(cv_csv);
                if (!out) fail("io_error", "cannot write " + cv_csv);
                out << "theta,re_C,im_C\n";
                std::vector<pc::cxd> values;
                pc::sample_curve(p, cv_samples, values);
                for (int i = 0; i < cv_samples; ++i)
                    out << fmt17(2.0 * M_PI * i / cv_samples) << "," << fmt17(values[i].real())
                        << "," << fmt17(values[i].imag()) << "\n";
                std::string pairs_path = cv_csv;
                const auto dot = pairs_path.rfind(".csv");
                if (dot != std::string::npos && dot == pairs_path.size() - 4)
                    pairs_path = pairs_path.substr(0, dot);
                pairs_path += ".pairs.csv";
                std::ofstream pout(pairs_path);
                pout << "theta1,theta2,refined\n";
                for (const auto& c : res.coincidence_pairs)
                    pout << fmt17(c.theta1) << "," << fmt17(c.theta2) << ","
                         << (c.refined ? 1 : 0) << "\n";
            }
            if (as_json) {
                print_json(pc::to_json(res));
            } else {
                std::cout << "k = " << res.k << ", j = " << res.j << ", samples = " << res.samples
                          << "\n";
                std::cout << "coincidence pairs: " << res.coincidence_pairs.size() << "\n";
                std::cout << "min arc gap = " << fmt17(res.min_arc_gap)
                          << " (threshold " << fmt17(res.threshold_arc) << ")\n";
                std::cout << "property (**): " << (res.property_star_star ? "true" : "false")
                          << "\n";
            }
            return kExitOk;
        }

        if (*subh) {
            std::vector<double> radii;
            for (int i = 0; i < sh_radii; ++i)
                radii.push_back(0.5 + 1.5 * i / std::max(1, sh_radii - 1));
            const auto rep = pc::subharmonicity_check(pc::family_poly(sh_t), sh_j, radii, sh_angles);
            if (as_json) {
                print_json(pc::to_json(rep));
            } else {
                std::cout << "min on annulus = " << fmt17(rep.min_on_annulus) << "\n";
                std::cout << "subharmonic: " << (rep.subharmonic ? "true" : "false")
                          << ", nowhere harmonic: " << (rep.nowhere_harmonic ? "true" : "false")
                          << "\n";
                std::cout << "finite-difference max rel err = " << fmt17(rep.fd_max_rel_err) << "\n";
            }
            return kExitOk;
        }

        if (*kallin) {
            const pc::KallinCase kc = pc::kallin_case_from_string(ka_case);
            pc::KallinReport rep;
            if (kc == pc::KallinCase::LinearS1) {
                rep = pc::kallin_verify_s1(ka_samples, ka_radius);
            } else {
                pc::Mat2 a1, a2;
                if (!ka_file.empty()) {
                    std::ifstream in(ka_file);
                    if (!in) fail("io_error", "cannot open " + ka_file);
                    json j = json::parse(in);
                    a1 = pc::mat2_from_json(j.at("a1"));
                    a2 = pc::mat2_from_json(j.at("a2"));
                } else {
                    double t = ka_t;
                    if (!ka_t_set) {
                        // Family instantiations that satisfy each case's gates.
                        t = kc == pc::KallinCase::SumOfSquaresT31   ? std::sqrt(3.0)
                            : kc == pc::KallinCase::SumOfSquaresT32 ? 1.5
                                                                    : 1.2;
                    }
                    std::tie(a1, a2) = pc::family_matrices(t);
                }
                rep = pc::kallin_verify(kc, a1, a2, ka_samples, ka_radius);
            }
            if (as_json) {
                print_json(pc::to_json(rep));
            } else {
                std::cout << "case " << pc::to_string(rep.case_id) << ": max violation = "
                          << fmt17(rep.max_violation)
                          << ", zero fiber ok = " << (rep.zero_fiber_ok ? "true" : "false") << "\n";
                for (const auto& a : rep.assumed) std::cout << "assumed: " << a << "\n";
            }
            const bool pass = rep.max_violation <= pc::default_tolerances().kallin_violation &&
                              rep.zero_fiber_ok;
            if (!pass) fail("certificate_failed", "sampling found a region violation",
                            pc::to_json(rep));
            return kExitOk;
        }

        if (*sweep) {
            if (!(sw_step > 0) || !(sw_max >= sw_min) || !(sw_min > 0))
                fail("invalid_parameter", "need 0 < t-min <= t-max and step > 0");
            std::vector<double> ts;
            for (double t = sw_min; t <= sw_max + sw_step / 2; t += sw_step) ts.push_back(t);
            std::vector<pc::FamilyClassification> entries(ts.size());
            const bool cubic = sw_surface == "cubic";
            // classify is pure; the grid parallelizes with a deterministic
            // merge by index.
            pc::parallel_for_index(static_cast<std::ptrdiff_t>(ts.size()), [&](std::ptrdiff_t i) {
                entries[static_cast<size_t>(i)] =
                    cubic ? pc::classify_cubic_surface(ts[static_cast<size_t>(i)])
                          : pc::classify_perturbed_surface(ts[static_cast<size_t>(i)]);
            });
            json jentries = json::array();
            json boundaries = json::array();
            for (size_t i = 0; i < entries.size(); ++i) {
                jentries.push_back(pc::to_json(entries[i]));
                if (i > 0 && entries[i].verdict.status != entries[i - 1].verdict.status)
                    boundaries.push_back((ts[i - 1] + ts[i]) / 2.0);
            }
            const json out{{"entries", jentries}, {"boundaries", boundaries}};
            if (!sw_out.empty()) {
                std::ofstream f(sw_out);
                if (!f) fail("io_error", "cannot write " + sw_out);
                f << out.dump(2) << "\n";
                std::cout << "wrote " << sw_out << " (" << entries.size() << " entries)\n";
            } else if (as_json) {
                print_json(out);
            } else {
                std::cout << entries.size() << " entries\n";
                std::cout << "boundaries:";
                for (const auto& b : boundaries) std::cout << " " << fmt17(b.get<double>());
                std::cout << "\n";
            }
            return kExitOk;
        }

        if (*factor) {
            const pc::CubicCoefficients c{parse_complex(fa_a1), parse_complex(fa_a2),
                                          parse_complex(fa_a3)};
            const auto planes = pc::factor_cubic_preimage(c);
            json out = json::array();
            for (const auto& p : planes) out.push_back(pc::to_json(p));
            print_json(out);
            return kExitOk;
        }
    } catch (const pc::NotFactorable& e) {
        json err{{"error", e.code()}, {"message", e.what()}, {"data", {{"residual", e.residual}}}};
        std::cerr << err.dump() << "\n";
        return kExitComputation;
    } catch (const pc::HypothesisViolated& e) {
        json err{{"error", e.code()},
                 {"message", e.what()},
                 {"data", {{"hypothesis", e.hypothesis}}}};
        std::cerr << err.dump() << "\n";
        return kExitComputation;
    } catch (const pc::Error& e) {
        std::cerr << json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
        return kExitComputation;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
        return kExitComputation;
    }
    return kExitUsage;
}
