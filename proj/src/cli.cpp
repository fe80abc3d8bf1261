#include "kslope/cli.hpp"

#include "kslope/corpus.hpp"
#include "kslope/destabilize.hpp"
#include "kslope/documents.hpp"
#include "kslope/errors.hpp"
#include "kslope/fibration.hpp"
#include "kslope/seshadri.hpp"
#include "kslope/setup_io.hpp"
#include "kslope/slope.hpp"
#include "kslope/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace kslope::cli {

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_error = 2;
constexpr int exit_not_found = 3;

Rational parse_rational_arg(const std::string& text, const char* what) {
    if (auto r = Rational::parse(text)) return *r;
    fail(errc::malformed_rational, std::string("invalid rational for ") + what + ": \"" + text + "\"");
}

// Comma-separated rationals, e.g. "2,2,1/1".
ClassVector parse_class_arg(const std::string& text, const char* what) {
    ClassVector v;
    std::stringstream in(text);
    std::string piece;
    while (std::getline(in, piece, ',')) v.coords.push_back(parse_rational_arg(piece, what));
    if (v.coords.empty()) fail(errc::malformed_rational, std::string("empty class vector for ") + what);
    return v;
}

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::malformed_document, "cannot open \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

const Divisor& require_divisor(const Setup& s, const std::string& name) {
    if (const Divisor* d = s.find_divisor(name)) return *d;
    fail(errc::precondition, "setup \"" + s.name + "\" declares no divisor named \"" + name + "\"");
}

json certificate(const std::string& command, const Setup* setup, json inputs, json result) {
    json j;
    j["command"] = command;
    j["engine"] = json{{"name", engine_name}, {"version", engine_version}};
    if (setup) j["setup_digest"] = setup_digest(*setup);
    j["inputs"] = std::move(inputs);
    j["result"] = std::move(result);
    return j;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Kahler slope (semi)stability engine"};
    app.name("kslope");
    app.require_subcommand(1);

    bool json_errors = false;
    app.add_flag("--json-errors", json_errors, "report errors as JSON on stderr");

    std::string setup_path, divisor_name, lambda_max_text = "1", tol_text = "1/1024";
    std::string reference_text, twist_text, omega_text;
    int depth = 20;
    bool ungated = false;
    long sample_count = 16;

    auto add_setup = [&](CLI::App* cmd) {
        cmd->add_option("--setup", setup_path, "setup document (JSON file, or - for stdin)")->required();
    };
    auto add_divisor = [&](CLI::App* cmd) {
        cmd->add_option("--divisor", divisor_name, "name of a declared divisor")->required();
    };
    auto add_overrides = [&](CLI::App* cmd) {
        cmd->add_option("--omega", omega_text, "override the polarization class, e.g. 2,2,1");
        cmd->add_option("--twist", twist_text, "override the twist class, e.g. 0,0,0");
    };

    CLI::App* check = app.add_subcommand("check", "classify the sign of f_alpha on (0, lambda_max]");
    add_setup(check);
    add_divisor(check);
    check->add_option("--lambda-max", lambda_max_text, "right end of the test interval (rational)");
    add_overrides(check);

    CLI::App* slope_poly = app.add_subcommand("slope-poly", "print the exact slope polynomials and energy pieces");
    add_setup(slope_poly);
    add_divisor(slope_poly);
    add_overrides(slope_poly);

    CLI::App* audit = app.add_subcommand("audit", "compare the canonical packaging with the printed variant");
    add_setup(audit);
    add_divisor(audit);
    add_overrides(audit);

    CLI::App* seshadri = app.add_subcommand("seshadri", "certified enclosure of the Seshadri-type supremum");
    add_setup(seshadri);
    add_divisor(seshadri);
    seshadri->add_option("--tol", tol_text, "enclosure width tolerance (rational)");

    CLI::App* destabilize = app.add_subcommand("destabilize", "search the degeneration schedule for a witness");
    add_setup(destabilize);
    add_divisor(destabilize);
    destabilize->add_option("--reference", reference_text, "reference polarization (default: the document's omega)");
    destabilize->add_option("--depth", depth, "schedule is s = 2^-1 .. 2^-depth")->check(CLI::Range(1, 64));
    destabilize->add_flag("--ungated", ungated, "skip the destabilization criterion gate");

    CLI::App* adiabatic = app.add_subcommand("adiabatic", "adiabatic twist and obstruction over a fibration");
    add_setup(adiabatic);
    add_divisor(adiabatic);
    adiabatic->add_option("--reference", reference_text, "reference polarization (default: the document's omega)");
    adiabatic->add_option("--depth", depth, "schedule is s = 2^-1 .. 2^-depth")->check(CLI::Range(1, 64));

    CLI::App* bundle = app.add_subcommand("bundle", "Mumford-slope comparison for a projective bundle");
    std::string split_text, sub_degree_text, total_degree_text;
    long sub_rank = 0, total_rank = 0;
    bundle->add_option("--setup", setup_path, "document with a bundle section (JSON file, or - for stdin)");
    bundle->add_option("--split", split_text, "summand degrees, e.g. -1,0");
    bundle->add_option("--sub-degree", sub_degree_text, "degree of the corank-one subbundle");
    bundle->add_option("--sub-rank", sub_rank, "rank of the subbundle");
    bundle->add_option("--total-degree", total_degree_text, "degree of the whole bundle");
    bundle->add_option("--total-rank", total_rank, "rank of the whole bundle");

    CLI::App* sample = app.add_subcommand("sample", "CSV samples of the slope polynomials");
    add_setup(sample);
    add_divisor(sample);
    sample->add_option("--lambda-max", lambda_max_text, "right end of the sampled interval (rational)");
    sample->add_option("--count", sample_count, "number of sample points")->check(CLI::Range(1l, 100000l));
    add_overrides(sample);

    CLI::App* corpus = app.add_subcommand("corpus", "emit a built-in reference document");
    std::string corpus_name;
    long genus = 2, degree = 2;
    std::string h2_text, h_gamma_text, k_h_text, p_a_text, k_gamma_text, k2_text;
    corpus->add_option("name", corpus_name, "pp2 | product-of-curves | ah | voisin | list")->required();
    corpus->add_option("--genus", genus, "genus parameter (product-of-curves, ah)");
    corpus->add_option("--degree", degree, "degree parameter (ah)");
    corpus->add_option("--h2", h2_text, "H.H (ah)");
    corpus->add_option("--h-gamma", h_gamma_text, "H.Gamma (ah)");
    corpus->add_option("--k-h", k_h_text, "K.H (ah)");
    corpus->add_option("--p-a", p_a_text, "arithmetic genus of Gamma (ah, optional)");
    corpus->add_option("--k-gamma", k_gamma_text, "K.Gamma (ah, optional, overrides adjunction)");
    corpus->add_option("--k2", k2_text, "K.K (ah, optional)");

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("kslope");
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }

    try {
        auto load = [&]() {
            Setup s = load_setup(read_text(setup_path));
            if (!omega_text.empty()) {
                s = s.with_omega(parse_class_arg(omega_text, "--omega"));
                validate(s);
            }
            if (!twist_text.empty()) {
                s = s.with_twist(parse_class_arg(twist_text, "--twist"));
                validate(s);
            }
            return s;
        };
        auto reference_of = [&](const Setup& s) {
            return reference_text.empty() ? s.omega : parse_class_arg(reference_text, "--reference");
        };

        if (app.got_subcommand(check)) {
            Setup s = load();
            const Divisor& d = require_divisor(s, divisor_name);
            Rational lambda_max = parse_rational_arg(lambda_max_text, "--lambda-max");
            Verdict v = check_stability(s, d, lambda_max);
            json result;
            result["verdict"] = verdict_json(v);
            result["polynomials"] = slope_data_json(slope_data(s, d));
            json inputs{{"setup", s.name}, {"divisor", divisor_name}, {"lambda_max", rational_json(lambda_max)}};
            emit(out, certificate("check", &s, inputs, result));
            return exit_ok;
        }

        if (app.got_subcommand(slope_poly)) {
            Setup s = load();
            const Divisor& d = require_divisor(s, divisor_name);
            json result;
            result["polynomials"] = slope_data_json(slope_data(s, d));
            result["energy"] = energy_pieces_json(energy_pieces(s, d));
            json inputs{{"setup", s.name}, {"divisor", divisor_name}};
            emit(out, certificate("slope-poly", &s, inputs, result));
            return exit_ok;
        }

        if (app.got_subcommand(audit)) {
            Setup s = load();
            const Divisor& d = require_divisor(s, divisor_name);
            json inputs{{"setup", s.name}, {"divisor", divisor_name}};
            emit(out, certificate("audit", &s, inputs, audit_json(audit_printed(s, d))));
            return exit_ok;
        }

        if (app.got_subcommand(seshadri)) {
            Setup s = load();
            const Divisor& d = require_divisor(s, divisor_name);
            Rational tol = parse_rational_arg(tol_text, "--tol");
            std::optional<Enclosure> enc = seshadri_enclosure(s, d, tol);
            json result;
            result["enclosure"] = enc ? enclosure_json(*enc) : json(nullptr);
            if (!enc) result["note"] = "no declared constraint binds; the supremum is unbounded in this model";
            json inputs{{"setup", s.name}, {"divisor", divisor_name}, {"tol", rational_json(tol)}};
            emit(out, certificate("seshadri", &s, inputs, result));
            return exit_ok;
        }

        if (app.got_subcommand(destabilize)) {
            Setup s = load();
            const Divisor& d = require_divisor(s, divisor_name);
            ClassVector reference = reference_of(s);
            RpCriterion criterion = rp_criterion(s, d);
            std::vector<Rational> schedule = default_schedule(depth);
            std::optional<Witness> w = ungated ? witness_search(s, d, reference, schedule)
                                             : find_witness(s, d, reference, schedule);
            DegenerationFamily family = degenerating_family(s, d, reference);
            json result;
            result["criterion"] = json{{"holds", criterion.holds}, {"value", rational_json(criterion.value)}};
            json coeffs = json::array();
            for (const Rational& c : family.r) coeffs.push_back(rational_json(c));
            result["family"] = json{{"reference", class_json(reference)}, {"r", coeffs}};
            result["witness"] = w ? witness_json(*w, setup_digest(s), d.name, reference, family.r) : json(nullptr);
            if (!w) result["note"] = "schedule exhausted without a certified violation";
            json inputs{{"setup", s.name},
                        {"divisor", divisor_name},
                        {"depth", depth},
                        {"gated", !ungated}};
            emit(out, certificate("destabilize", &s, inputs, result));
            return w ? exit_ok : exit_not_found;
        }

        if (app.got_subcommand(adiabatic)) {
            Setup s = load();
            const Divisor& d = require_divisor(s, divisor_name);
            if (!s.fibration) fail(errc::precondition, "document has no fibration section");
            const FibrationSection& section = *s.fibration;
            FibrationData f;
            f.base = s;
            f.fibre_dimension = section.fibre_dimension;
            if (section.fibre_scalar) {
                f.fibre_scalar = *section.fibre_scalar;
            } else if (section.fibre_genus && section.fibre_degree) {
                f.fibre_scalar = fibre_average_scalar(*section.fibre_genus, *section.fibre_degree);
            } else {
                fail(errc::precondition, "fibration section needs fibre_scalar, or fibre_genus and fibre_degree");
            }
            f.pushforward_canonical = section.pushforward_canonical;
            f.pushforward_polarization = section.pushforward_polarization;

            ClassVector reference = reference_of(s);
            ObstructionResult res = adiabatic_obstruction(f, d, reference, default_schedule(depth));
            json result;
            result["fibre_scalar"] = rational_json(f.fibre_scalar);
            result["twist"] = class_json(adiabatic_twist(f));
            result["twist_pairing"] = rational_json(res.twist_pairing);
            result["semipositivity_unverified"] = res.semipositivity_unverified;
            if (res.witness) {
                DegenerationFamily family = degenerating_family(res.twisted_base, d, reference);
                result["witness"] = witness_json(*res.witness, setup_digest(res.twisted_base), d.name, reference, family.r);
            } else {
                result["witness"] = nullptr;
                result["note"] = "schedule exhausted without a certified violation";
            }
            json inputs{{"setup", s.name}, {"divisor", divisor_name}, {"depth", depth}};
            emit(out, certificate("adiabatic", &s, inputs, result));
            return res.witness ? exit_ok : exit_not_found;
        }

        if (app.got_subcommand(bundle)) {
            BundleData data;
            json inputs;
            if (!split_text.empty()) {
                ClassVector degrees = parse_class_arg(split_text, "--split");
                data.degrees = degrees.coords;
                data.total_rank = static_cast<long>(data.degrees.size());
                for (const Rational& deg : data.degrees) data.total_degree += deg;
                inputs["split"] = split_text;
            } else if (!sub_degree_text.empty() || !total_degree_text.empty()) {
                data.sub_degree = parse_rational_arg(sub_degree_text, "--sub-degree");
                data.total_degree = parse_rational_arg(total_degree_text, "--total-degree");
                data.sub_rank = sub_rank;
                data.total_rank = total_rank;
                inputs["sub_degree"] = rational_json(data.sub_degree);
                inputs["sub_rank"] = sub_rank;
                inputs["total_degree"] = rational_json(data.total_degree);
                inputs["total_rank"] = total_rank;
            } else if (!setup_path.empty()) {
                data = load_bundle(read_text(setup_path));
                inputs["setup"] = "document";
            } else {
                fail(errc::precondition, "bundle needs --setup, --split, or sub/total data");
            }
            emit(out, certificate("bundle", nullptr, inputs, bundle_verdict_json(bundle_obstruction(data))));
            return exit_ok;
        }

        if (app.got_subcommand(sample)) {
            Setup s = load();
            const Divisor& d = require_divisor(s, divisor_name);
            Rational lambda_max = parse_rational_arg(lambda_max_text, "--lambda-max");
            if (lambda_max.sign() <= 0) fail(errc::precondition, "lambda_max must be positive");
            SlopeData sd = slope_data(s, d);
            out << "index,lambda,lambda_decimal,f_alpha,f_alpha_decimal,num,num_decimal,den,den_decimal\n";
            for (long i = 1; i <= sample_count; ++i) {
                Rational lambda = lambda_max * Rational(i) / Rational(sample_count);
                Rational f = sd.f_alpha(lambda), num_v = sd.num(lambda), den_v = sd.den(lambda);
                out << i << ',' << lambda.str() << ',' << to_decimal_string(lambda) << ',' << f.str() << ','
                    << to_decimal_string(f) << ',' << num_v.str() << ',' << to_decimal_string(num_v) << ','
                    << den_v.str() << ',' << to_decimal_string(den_v) << "\n";
            }
            return exit_ok;
        }

        if (app.got_subcommand(corpus)) {
            auto optional_rational = [&](const std::string& text, const char* what) {
                return text.empty() ? std::optional<Rational>() : std::optional<Rational>(parse_rational_arg(text, what));
            };
            if (corpus_name == "list") {
                out << "pp2\nproduct-of-curves\nah\nvoisin\n";
                return exit_ok;
            }
            if (corpus_name == "pp2") {
                out << serialize_setup(pp2());
                return exit_ok;
            }
            if (corpus_name == "product-of-curves") {
                out << serialize_setup(product_of_curves(genus));
                return exit_ok;
            }
            if (corpus_name == "ah") {
                AhAmbient ambient;
                ambient.h_squared = optional_rational(h2_text, "--h2");
                ambient.h_dot_gamma = optional_rational(h_gamma_text, "--h-gamma");
                ambient.k_dot_h = optional_rational(k_h_text, "--k-h");
                ambient.p_a = optional_rational(p_a_text, "--p-a");
                ambient.k_dot_gamma = optional_rational(k_gamma_text, "--k-gamma");
                ambient.k_squared = optional_rational(k2_text, "--k2");
                Setup s = ah_template(genus, degree, ambient);
                validate(s);
                out << serialize_setup(s);
                return exit_ok;
            }
            if (corpus_name == "voisin") {
                BundleData b = voisin_bundle_example();
                json degrees = json::array();
                for (const Rational& deg : b.degrees) degrees.push_back(rational_json(deg));
                json doc;
                doc["bundle"] = json{{"degrees", degrees},
                                     {"sub_degree", rational_json(b.sub_degree)},
                                     {"sub_rank", b.sub_rank},
                                     {"total_degree", rational_json(b.total_degree)},
                                     {"total_rank", b.total_rank}};
                out << doc.dump(2) << "\n";
                return exit_ok;
            }
            fail(errc::precondition, "unknown corpus name \"" + corpus_name + "\" (try: corpus list)");
        }

        err << "error: no subcommand selected\n";
        return exit_error;
    } catch (const error& e) {
        if (json_errors) {
            json j;
            j["error"] = json{{"code", errc_name(e.code())}, {"message", e.what()}};
            err << j.dump(2) << "\n";
        } else {
            err << "error: " << e.what() << " [" << errc_name(e.code()) << "]\n";
        }
        return exit_error;
    } catch (const std::exception& e) {
        if (json_errors) {
            json j;
            j["error"] = json{{"code", "internal"}, {"message", e.what()}};
            err << j.dump(2) << "\n";
        } else {
            err << "error: " << e.what() << " [internal]\n";
        }
        return exit_error;
    }
}

} // namespace kslope::cli
