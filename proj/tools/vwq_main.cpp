// vwq: command line front end for the exact q-series engine.
//
// Subcommands:
//   hurwitz     class-number table as CSV
//   theta       root-lattice theta block as a q-series
//   partition   rank-2 partition functions on the supported surfaces
//   verify      cross-checks between independently computed quantities
//   monopole    monopole-branch series next to its closed form
//   toda        eta-power / theta-block product series
//   sduality    numerical S-duality residual at a point of the upper half plane
//   invariants  fixed invariants of the degree-one model

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "vwq/errors.hpp"
#include "vwq/mock_modular.hpp"
#include "vwq/number_theory.hpp"
#include "vwq/partition.hpp"
#include "vwq/rational.hpp"
#include "vwq/series.hpp"
#include "vwq/tautological.hpp"

namespace {

using vwq::FracExpSeries;
using vwq::Rational;
using ordered_json = nlohmann::ordered_json;

std::string render_series(const FracExpSeries& s, const std::string& format) {
    if (format == "json") return vwq::to_canonical_json(s);
    if (format == "csv") return vwq::to_csv(s);
    return vwq::to_text(s);
}

void deliver(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw vwq::Error("cannot open output file: " + out_path);
    out << payload;
    if (!payload.empty() && payload.back() != '\n') out << '\n';
}

std::string rational_str(const Rational& r) { return vwq::to_string(r); }

// Mismatch list shared by the verify reports.
ordered_json mismatch_json(const std::vector<std::pair<Rational, Rational>>& mismatches) {
    ordered_json arr = ordered_json::array();
    for (const auto& [e, d] : mismatches) {
        ordered_json row;
        row["exp"] = rational_str(e);
        row["diff"] = rational_str(d);
        arr.push_back(row);
    }
    return arr;
}

vwq::UpperHalfPoint parse_tau(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw vwq::DomainError("tau must be given as RE,IM");
    try {
        size_t used = 0;
        double re = std::stod(text.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument("trailing");
        std::string imtext = text.substr(comma + 1);
        double im = std::stod(imtext, &used);
        if (used != imtext.size()) throw std::invalid_argument("trailing");
        return vwq::UpperHalfPoint{re, im};
    } catch (const std::exception&) {
        throw vwq::DomainError("tau must be given as RE,IM with numeric parts");
    }
}

ordered_json transform_json(const vwq::TransformReport& rep) {
    ordered_json j;
    j["residual"] = rep.residual;
    j["tol"] = rep.tol;
    j["pass"] = rep.pass;
    if (rep.sign != 0) j["sign"] = rep.sign;
    j["cutoffs"] = {{"series", rep.cutoff_series}, {"completion", rep.cutoff_completion}};
    return j;
}

int run_hurwitz(long long max_disc, const std::string& out_path) {
    std::ostringstream csv;
    csv << "disc,value\n";
    for (long long d = 0; d <= max_disc; ++d)
        csv << d << ',' << rational_str(vwq::hurwitz(d)) << '\n';
    deliver(csv.str(), out_path);
    return 0;
}

int run_theta(int n, long order, const std::string& format, const std::string& out_path) {
    FracExpSeries s = vwq::theta_block(n, static_cast<int>(order));
    deliver(render_series(s, format), out_path);
    return 0;
}

int run_partition(const std::string& surface, long c1, int lambda, bool lambda_given,
                  bool hat, bool so3, bool drop, long order, const std::string& format,
                  const std::string& out_path) {
    if (lambda_given && surface != "p222")
        throw vwq::DomainError("--lambda only applies to --surface p222");
    if (hat && so3) throw vwq::DomainError("--hat and --so3 are mutually exclusive");
    if (drop && (hat || so3))
        throw vwq::DomainError("--drop-divisor-term only applies to the bare partition function");
    FracExpSeries s = FracExpSeries::zero(0);
    if (surface == "p2") {
        if (so3) {
            s = vwq::z_so3_p2(order);
        } else if (hat) {
            s = vwq::z_hat_p2(c1, order);
        } else {
            s = vwq::z_vb_p2(c1, order, drop);
        }
    } else if (surface == "p122") {
        if (hat || so3) throw vwq::DomainError("--hat/--so3 only apply to --surface p2");
        s = vwq::z_vb_p122(c1, order);
    } else if (surface == "p222") {
        if (hat || so3) throw vwq::DomainError("--hat/--so3 only apply to --surface p2");
        s = vwq::z_vb_p222(c1, lambda, order);
    } else {
        throw vwq::DomainError("unknown surface: " + surface);
    }
    deliver(render_series(s, format), out_path);
    return 0;
}

int run_verify(const std::string& identity, long c1, bool c1_given, long order,
               long genus, long gerbe, const std::string& out_path) {
    ordered_json report;
    report["identity"] = identity;
    bool pass = true;

    if (identity == "p122-p2") {
        vwq::IdentityReport rep = vwq::verify_p122_identity(c1, order);
        pass = rep.pass;
        report["c1"] = c1;
        report["order"] = order;
        report["window"] = rational_str(rep.window);
        report["mismatches"] = mismatch_json(rep.mismatches);
    } else if (identity == "p222-shift") {
        std::vector<long> c1_list = c1_given ? std::vector<long>{c1}
                                             : std::vector<long>{0, 2, 4, 6};
        ordered_json checks = ordered_json::array();
        for (long c : c1_list) {
            for (int lam : {0, 1}) {
                FracExpSeries lhs = vwq::z_vb_p222(c, lam, order);
                FracExpSeries rhs = vwq::z_vb_p2(c / 2 + lam, order);
                auto diffs = vwq::diff_on_common_window(lhs, rhs);
                bool same_window = lhs.trunc() == rhs.trunc();
                bool ok = diffs.empty() && same_window;
                pass = pass && ok;
                ordered_json check;
                check["c1"] = c;
                check["lambda"] = lam;
                check["pass"] = ok;
                check["mismatches"] = mismatch_json(diffs);
                checks.push_back(check);
            }
        }
        report["order"] = order;
        report["checks"] = checks;
    } else if (identity == "so3-assembly") {
        FracExpSeries lhs = vwq::z_so3_p2(order);
        // Independent recomputation straight from the class-number data: the
        // two constituent families land on exponents -n and 1/4 - n after
        // their shifts, each carrying half of the original coefficient.
        std::vector<std::pair<Rational, Rational>> terms;
        for (long n = 1; n <= order; ++n) {
            Rational even_coeff = Rational(3, 2) * vwq::hurwitz(4 * n)
                                  - Rational(3, 4) * vwq::divisor_count(n);
            terms.emplace_back(Rational(-n), even_coeff);
            terms.emplace_back(Rational(1, 4) - n,
                               Rational(3, 2) * vwq::hurwitz(4 * n - 1));
        }
        FracExpSeries rhs = FracExpSeries::from_terms(terms, Rational(0));
        auto diffs = vwq::diff_on_common_window(lhs, rhs);
        pass = diffs.empty() && lhs.trunc() == rhs.trunc();
        report["order"] = order;
        report["window"] = rational_str(lhs.trunc());
        report["mismatches"] = mismatch_json(diffs);
    } else if (identity == "monopole-closed-form") {
        vwq::CurveModel cm(genus, gerbe);
        FracExpSeries computed = vwq::monopole_series(cm, order);
        FracExpSeries closed = vwq::closed_form(genus, order);
        auto diffs = vwq::diff_on_common_window(computed, closed);
        pass = diffs.empty() && computed.trunc() == closed.trunc();
        report["genus"] = genus;
        report["gerbe"] = gerbe;
        report["order"] = order;
        report["mismatches"] = mismatch_json(diffs);
    } else {
        throw vwq::DomainError("unknown identity: " + identity);
    }

    report["pass"] = pass;
    deliver(report.dump(2), out_path);
    return pass ? 0 : 1;
}

int run_monopole(long genus, long gerbe, long order, const std::string& format,
                 const std::string& out_path) {
    vwq::CurveModel cm(genus, gerbe);
    FracExpSeries computed = vwq::monopole_series(cm, order);
    FracExpSeries closed = vwq::closed_form(genus, order);
    bool identical = (computed == closed) && computed.trunc() == closed.trunc();
    std::string payload;
    if (format == "json") {
        // Embed the canonical objects verbatim so their byte form is preserved.
        std::ostringstream os;
        os << "{\"computed\": " << vwq::to_canonical_json(computed)
           << ", \"closed_form\": " << vwq::to_canonical_json(closed)
           << ", \"identical\": " << (identical ? "true" : "false") << "}";
        payload = os.str();
    } else {
        std::ostringstream os;
        os << "computed:\n" << render_series(computed, format)
           << "closed form:\n" << render_series(closed, format)
           << "identical: " << (identical ? "yes" : "no") << '\n';
        payload = os.str();
    }
    deliver(payload, out_path);
    return 0;
}

int run_toda(long chi, const std::string& ade_csv, long order, const std::string& format,
             const std::string& out_path) {
    vwq::AdeSurface surface;
    surface.chi_resolved = chi;
    if (!ade_csv.empty()) {
        std::stringstream ss(ade_csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) throw vwq::DomainError("--ade must be a comma list of ranks");
            try {
                size_t used = 0;
                int v = std::stoi(item, &used);
                if (used != item.size()) throw std::invalid_argument("trailing");
                surface.singularities.push_back(v);
            } catch (const std::exception&) {
                throw vwq::DomainError("--ade must be a comma list of ranks");
            }
        }
    }
    FracExpSeries s = vwq::toda_series(surface, order);
    deliver(render_series(s, format), out_path);
    return 0;
}

int run_sduality(const std::string& tau_text, double tol, const std::string& out_path) {
    vwq::UpperHalfPoint tau = parse_tau(tau_text);
    vwq::TransformReport rep = vwq::check_sduality_p2(tau, tol);
    ordered_json j = transform_json(rep);
    j["tau"] = {{"re", tau.re}, {"im", tau.im}};
    deliver(j.dump(2), out_path);
    return rep.pass ? 0 : 1;
}

int run_invariants(const std::string& format, const std::string& out_path) {
    vwq::QuinticInvariants inv = vwq::quintic_invariants();
    std::string payload;
    if (format == "json") {
        ordered_json j;
        j["g_C"] = inv.g_C;
        j["p_g"] = inv.p_g;
        j["h0K2"] = inv.h0K2;
        payload = j.dump(2);
    } else {
        std::ostringstream os;
        os << "g_C=" << inv.g_C << "\np_g=" << inv.p_g << "\nh0K2=" << inv.h0K2 << '\n';
        payload = os.str();
    }
    deliver(payload, out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    long default_order = 12;
    if (const char* env = std::getenv("VWQ_DEFAULT_ORDER")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v <= 0) {
            std::cerr << "error: VWQ_DEFAULT_ORDER must be a positive integer\n";
            return 2;
        }
        default_order = v;
    }

    CLI::App app{"exact q-series engine: partition functions, theta blocks, modular checks"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string out_path;
    long order = default_order;

    long long hurwitz_max = 100;
    auto* cmd_hurwitz = app.add_subcommand("hurwitz", "class-number table as CSV");
    cmd_hurwitz->add_option("--max", hurwitz_max, "largest discriminant")
        ->check(CLI::NonNegativeNumber);
    cmd_hurwitz->add_option("--out", out_path, "write output to a file");

    int theta_n = 1;
    auto* cmd_theta = app.add_subcommand("theta", "root-lattice theta block");
    cmd_theta->add_option("--n", theta_n, "block index (rank)")->required()
        ->check(CLI::PositiveNumber);
    cmd_theta->add_option("--order", order, "truncation order");
    cmd_theta->add_option("--format", format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd_theta->add_option("--out", out_path, "write output to a file");

    std::string surface;
    long c1 = 0;
    int lambda = 0;
    bool hat = false, so3 = false, drop = false;
    auto* cmd_partition = app.add_subcommand("partition", "rank-2 partition function");
    cmd_partition->add_option("--surface", surface, "p2|p122|p222")->required()
        ->check(CLI::IsMember({"p2", "p122", "p222"}));
    cmd_partition->add_option("--c1", c1, "first Chern class parameter");
    cmd_partition->add_option("--lambda", lambda, "gerbe twist (p222 only)")
        ->check(CLI::IsMember({0, 1}));
    cmd_partition->add_flag("--hat", hat, "include the eta-power prefactor (p2 only)");
    cmd_partition->add_flag("--so3", so3, "coarse combination over both classes (p2 only)");
    cmd_partition->add_flag("--drop-divisor-term", drop, "omit the divisor-count correction");
    cmd_partition->add_option("--order", order, "truncation order");
    cmd_partition->add_option("--format", format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd_partition->add_option("--out", out_path, "write output to a file");

    std::string identity;
    long genus = 6, gerbe = 1;
    auto* cmd_verify = app.add_subcommand("verify", "cross-check two independent computations");
    cmd_verify->add_option("--identity", identity,
                           "p122-p2|p222-shift|so3-assembly|monopole-closed-form")
        ->required()
        ->check(CLI::IsMember({"p122-p2", "p222-shift", "so3-assembly", "monopole-closed-form"}));
    cmd_verify->add_option("--c1", c1, "first Chern class parameter");
    cmd_verify->add_option("--order", order, "truncation order");
    cmd_verify->add_option("--genus", genus, "curve genus (monopole identities)");
    cmd_verify->add_option("--gerbe", gerbe, "gerbe order (monopole identities)")
        ->check(CLI::PositiveNumber);
    cmd_verify->add_option("--out", out_path, "write output to a file");

    auto* cmd_monopole = app.add_subcommand("monopole", "monopole series and closed form");
    cmd_monopole->add_option("--genus", genus, "curve genus");
    cmd_monopole->add_option("--gerbe", gerbe, "gerbe order")->check(CLI::PositiveNumber);
    cmd_monopole->add_option("--order", order, "truncation order");
    cmd_monopole->add_option("--format", format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd_monopole->add_option("--out", out_path, "write output to a file");

    long chi = 0;
    std::string ade_csv;
    auto* cmd_toda = app.add_subcommand("toda", "eta-power / theta-block product");
    cmd_toda->add_option("--chi", chi, "resolved Euler number")->required();
    cmd_toda->add_option("--ade", ade_csv, "comma list of A-type ranks, e.g. 1,2,1");
    cmd_toda->add_option("--order", order, "truncation order");
    cmd_toda->add_option("--format", format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd_toda->add_option("--out", out_path, "write output to a file");

    std::string tau_text = "0,1";
    double tol = 1e-6;
    auto* cmd_sduality = app.add_subcommand("sduality", "numerical S-duality residual");
    cmd_sduality->add_option("--tau", tau_text, "point of the upper half plane as RE,IM");
    cmd_sduality->add_option("--tol", tol, "pass/fail tolerance")
        ->check(CLI::PositiveNumber);
    cmd_sduality->add_option("--out", out_path, "write output to a file");

    std::string inv_format = "text";
    auto* cmd_invariants = app.add_subcommand("invariants", "fixed invariants of the model");
    cmd_invariants->add_option("--format", inv_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd_invariants->add_option("--out", out_path, "write output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return 2;
    }

    try {
        if (app.got_subcommand(cmd_hurwitz))
            return run_hurwitz(hurwitz_max, out_path);
        if (app.got_subcommand(cmd_theta))
            return run_theta(theta_n, order, format, out_path);
        if (app.got_subcommand(cmd_partition))
            return run_partition(surface, c1, lambda, cmd_partition->count("--lambda") > 0,
                                 hat, so3, drop, order, format, out_path);
        if (app.got_subcommand(cmd_verify))
            return run_verify(identity, c1, cmd_verify->count("--c1") > 0, order, genus,
                              gerbe, out_path);
        if (app.got_subcommand(cmd_monopole))
            return run_monopole(genus, gerbe, order, format, out_path);
        if (app.got_subcommand(cmd_toda))
            return run_toda(chi, ade_csv, order, format, out_path);
        if (app.got_subcommand(cmd_sduality))
            return run_sduality(tau_text, tol, out_path);
        if (app.got_subcommand(cmd_invariants))
            return run_invariants(inv_format, out_path);
    } catch (const vwq::IrrationalityError& e) {
        std::cerr << "finding: " << e.what() << '\n';
        return 1;
    } catch (const vwq::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
