#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coxkit/coxeter.hpp"
#include "coxkit/fan.hpp"
#include "coxkit/fixtures.hpp"
#include "coxkit/jtensor.hpp"
#include "coxkit/serialize.hpp"
#include "coxkit/surface.hpp"
#include "coxkit/tables.hpp"

namespace {

using coxkit::CoxeterReport;
using coxkit::Fan;
using coxkit::JordanSum;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitSemantic = 3;
constexpr int kExitVerification = 4;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CrossCheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw InputError("cannot read '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Fan load_fan(const std::string& path) { return coxkit::fan_from_json(read_file(path)); }

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out.good()) throw InputError("cannot write '" + out_path + "'");
    out << text << "\n";
}

std::string join_sizes(const std::vector<std::size_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    return os.str();
}

void emit_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

void emit_tsv(const std::vector<std::pair<std::string, std::string>>& rows) {
    for (const auto& [key, value] : rows) std::cout << key << "\t" << value << "\n";
}

std::string jordan_text(const coxkit::JordanType& type) { return type.to_string(); }

std::vector<std::pair<std::string, std::string>> report_rows(const CoxeterReport& report) {
    std::vector<std::pair<std::string, std::string>> rows;
    if (!report.name.empty()) rows.emplace_back("name", report.name);
    rows.emplace_back("n", std::to_string(report.n));
    rows.emplace_back("m", std::to_string(report.m));
    rows.emplace_back("eigenvalue", coxkit::to_string(report.eigenvalue));
    rows.emplace_back("coxeter_polynomial", report.polynomial.to_string());
    rows.emplace_back("verified", report.polynomial.verified ? "true" : "false");
    rows.emplace_back("jordan", jordan_text(report.jordan));
    rows.emplace_back("jordan_sizes", join_sizes(report.jordan.sizes()));
    rows.emplace_back("betti", join_sizes(report.betti_numbers));
    rows.emplace_back("lefschetz_K", report.lefschetz_canonical ? "true" : "false");
    rows.emplace_back("lefschetz_-K", report.lefschetz_anticanonical ? "true" : "false");
    rows.emplace_back("predicted_jordan",
                      report.predicted ? jordan_text(*report.predicted) : "-");
    rows.emplace_back("cone_count_jordan",
                      report.cone_count_route ? jordan_text(*report.cone_count_route) : "-");
    rows.emplace_back("betti_roundtrip",
                      report.betti_roundtrip ? join_sizes(*report.betti_roundtrip) : "-");
    rows.emplace_back("cross_check", coxkit::cross_check_text(report.cross_check));
    return rows;
}

void emit_report(const CoxeterReport& report, const std::string& format,
                 const ordered_json& extra = {}) {
    if (format == "json") {
        ordered_json j = coxkit::to_ordered_json(report);
        for (const auto& [key, value] : extra.items()) j[key] = value;
        emit_json(j);
        return;
    }
    auto rows = report_rows(report);
    for (const auto& [key, value] : extra.items())
        rows.emplace_back(key, value.is_string() ? value.get<std::string>() : value.dump());
    if (format == "tsv") {
        emit_tsv(rows);
        return;
    }
    for (const auto& [key, value] : rows) std::cout << key << ": " << value << "\n";
}

int check_report(const CoxeterReport& report) {
    if (report.cross_check == coxkit::CrossCheck::Mismatch)
        throw CrossCheckFailure("cross-check mismatch for '" + report.name + "'");
    return kExitOk;
}

void emit_table(const coxkit::TableResult& result, const std::string& format) {
    if (format == "json") {
        emit_json(coxkit::to_ordered_json(result));
        return;
    }
    if (format == "tsv") {
        for (const auto& row : result.rows) {
            std::cout << row.label << "\t" << row.expected << "\t" << row.computed << "\t"
                      << (row.ok ? "ok" : "MISMATCH");
            if (!row.note.empty()) std::cout << "\t" << row.note;
            std::cout << "\n";
        }
        std::cout << "summary\t" << result.cases_checked << " checked\t" << result.mismatches
                  << " mismatches\n";
        return;
    }
    for (const auto& row : result.rows) {
        std::cout << (row.ok ? "  ok  " : " FAIL ") << row.label << ": expected " << row.expected
                  << ", got " << row.computed;
        if (!row.note.empty()) std::cout << " [" << row.note << "]";
        std::cout << "\n";
    }
    std::cout << "table " << result.table << ": " << result.cases_checked << " case(s) checked, "
              << result.mismatches << " mismatch(es)\n";
}

std::size_t dimension_cap_from_env(std::size_t fallback) {
    const char* raw = std::getenv("COXKIT_DIM_CAP");
    if (!raw) return fallback;
    try {
        const long long v = std::stoll(raw);
        if (v <= 0) throw InputError("COXKIT_DIM_CAP must be positive");
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw InputError("COXKIT_DIM_CAP must be a positive integer");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Coxeter transformations, Jordan forms, and tensor calculus\n"
                 "for smooth complete toric varieties and rational surfaces"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "pretty";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "tsv", "pretty"}))
        ->capture_default_str();

    std::string fan_path, out_path;
    std::vector<std::string> tensor_tokens;
    std::vector<int> blowup_cone;
    std::string surface_base = "P2", table_name, cartan_path, product_x, product_y;
    long long hirzebruch_a = 0;
    std::size_t blowups = 0;
    bool emit_psi = false, run_oracle = false;
    std::size_t cap = dimension_cap_from_env(coxkit::kDefaultDimensionCap);

    auto* cmd_fan_info = app.add_subcommand("fan-info", "validate a fan file, count cones, Betti numbers");
    cmd_fan_info->add_option("path", fan_path, "fan JSON file")->required();

    auto* cmd_betti = app.add_subcommand("betti", "Betti numbers of a fan file");
    cmd_betti->add_option("path", fan_path, "fan JSON file")->required();

    auto* cmd_coxeter = app.add_subcommand("coxeter", "full Coxeter report for a fan file");
    cmd_coxeter->add_option("path", fan_path, "fan JSON file")->required();
    cmd_coxeter->add_flag("--emit-phi", emit_psi, "include the Coxeter matrix");

    auto* cmd_jordan = app.add_subcommand("jordan", "Jordan type of the Coxeter transformation");
    cmd_jordan->add_option("path", fan_path, "fan JSON file")->required();

    auto* cmd_lefschetz = app.add_subcommand("lefschetz", "Lefschetz status of K and -K");
    cmd_lefschetz->add_option("path", fan_path, "fan JSON file")->required();

    auto* cmd_surface = app.add_subcommand("surface", "Coxeter report for a blown-up surface");
    std::string surface_spec_path;
    auto* base_opt = cmd_surface->add_option("--base", surface_base, "base surface")
                         ->check(CLI::IsMember({"P2", "Hirzebruch"}))
                         ->capture_default_str();
    auto* a_opt = cmd_surface->add_option("--a", hirzebruch_a, "Hirzebruch parameter");
    auto* blowups_opt =
        cmd_surface->add_option("--blowups", blowups, "number of blown-up points")
            ->capture_default_str();
    cmd_surface->add_option("--spec", surface_spec_path, "surface spec JSON file")
        ->excludes(base_opt)
        ->excludes(a_opt)
        ->excludes(blowups_opt);
    cmd_surface->add_flag("--emit-psi", emit_psi, "include the multiplication matrix");

    auto* cmd_tensor = app.add_subcommand("tensor", "Jordan form of a tensor product of blocks");
    cmd_tensor->add_option("blocks", tensor_tokens, "blocks like \"J(1,2) J(1,3)\"")
        ->required()
        ->expected(-1);
    cmd_tensor->add_flag("--oracle", run_oracle, "also run the Kronecker oracle and diff");
    cmd_tensor->add_option("--cap", cap, "oracle dimension cap")->capture_default_str();

    auto* cmd_product = app.add_subcommand("product", "product fan of two fan files");
    cmd_product->add_option("x", product_x, "first fan JSON file")->required();
    cmd_product->add_option("y", product_y, "second fan JSON file")->required();
    cmd_product->add_option("-o,--out", out_path, "write the fan here instead of stdout");

    auto* cmd_blowup = app.add_subcommand("blowup", "star subdivision at a cone (ray indices)");
    cmd_blowup->add_option("path", fan_path, "fan JSON file")->required();
    cmd_blowup->add_option("cone", blowup_cone, "ray indices of the cone")->required()->expected(-1);
    cmd_blowup->add_option("-o,--out", out_path, "write the fan here instead of stdout");

    auto* cmd_cartan = app.add_subcommand("cartan", "-C^t C^(-1) of an integer matrix file");
    cmd_cartan->add_option("path", cartan_path, "text file, one matrix row per line")->required();

    auto* cmd_reproduce = app.add_subcommand("reproduce", "regenerate a verification table");
    cmd_reproduce->add_option("table", table_name, "one of: del-pezzo fano3 thm410 prop54 thm31")
        ->required()
        ->check(CLI::IsMember(coxkit::reproduce_table_names()));
    cmd_reproduce->add_option("--cap", cap, "oracle dimension cap")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (cmd_fan_info->parsed() || cmd_betti->parsed()) {
            const Fan fan = load_fan(fan_path);
            const auto violations = coxkit::validate(fan);
            if (!violations.empty()) {
                if (format == "json") {
                    ordered_json j;
                    if (!fan.name.empty()) j["name"] = fan.name;
                    j["valid"] = false;
                    j["violations"] = violations;
                    emit_json(j);
                } else {
                    for (const auto& v : violations) std::cout << "violation: " << v << "\n";
                }
                return kExitSemantic;
            }
            const auto counts = coxkit::cone_counts(fan).counts;
            const auto b = coxkit::betti(fan);
            if (format == "json") {
                ordered_json j;
                if (!fan.name.empty()) j["name"] = fan.name;
                j["valid"] = true;
                if (cmd_fan_info->parsed()) j["cone_counts"] = counts;
                j["betti"] = b;
                emit_json(j);
            } else if (format == "tsv") {
                std::vector<std::pair<std::string, std::string>> rows;
                if (!fan.name.empty()) rows.emplace_back("name", fan.name);
                rows.emplace_back("valid", "true");
                if (cmd_fan_info->parsed()) rows.emplace_back("cone_counts", join_sizes(counts));
                rows.emplace_back("betti", join_sizes(b));
                emit_tsv(rows);
            } else {
                if (!fan.name.empty()) std::cout << "name: " << fan.name << "\n";
                std::cout << "valid: yes\n";
                if (cmd_fan_info->parsed()) std::cout << "cone counts: " << join_sizes(counts) << "\n";
                std::cout << "betti: " << join_sizes(b) << "\n";
            }
            return kExitOk;
        }

        if (cmd_coxeter->parsed()) {
            const Fan fan = load_fan(fan_path);
            const auto report = coxkit::coxeter_report(fan);
            const auto ring = coxkit::ChowRing::build(fan);
            const auto canonical = ring.canonical_class();
            ordered_json extra;
            ordered_json basis = ordered_json::array();
            for (std::size_t d = 0; d < ring.graded_dims().size(); ++d) {
                ordered_json level = ordered_json::array();
                for (std::size_t i = 0; i < ring.graded_dims()[d]; ++i)
                    level.push_back(ring.basis_label(d, i));
                basis.push_back(level);
            }
            extra["basis"] = basis;
            extra["canonical_class"] = coxkit::to_ordered_json(canonical);
            extra["chern_canonical"] = coxkit::to_ordered_json(ring.chern_character(canonical));
            if (emit_psi) extra["coxeter_matrix"] = coxkit::to_ordered_json(report.coxeter);
            emit_report(report, format, extra);
            return check_report(report);
        }

        if (cmd_jordan->parsed()) {
            const auto report = coxkit::coxeter_report(load_fan(fan_path));
            if (format == "json") {
                ordered_json j;
                if (!report.name.empty()) j["name"] = report.name;
                j["eigenvalue"] = coxkit::to_string(report.eigenvalue);
                j["jordan"] = coxkit::to_ordered_json(report.jordan);
                emit_json(j);
            } else if (format == "tsv") {
                emit_tsv({{"eigenvalue", coxkit::to_string(report.eigenvalue)},
                          {"jordan", jordan_text(report.jordan)},
                          {"jordan_sizes", join_sizes(report.jordan.sizes())}});
            } else {
                std::cout << "jordan: " << jordan_text(report.jordan) << "\n";
            }
            return kExitOk;
        }

        if (cmd_lefschetz->parsed()) {
            const Fan fan = load_fan(fan_path);
            coxkit::require_valid(fan);
            const auto ring = coxkit::ChowRing::build(fan);
            const auto k = ring.canonical_class();
            const auto detail = coxkit::lefschetz_check(ring, k);
            const auto anti = coxkit::lefschetz_check(ring, k * coxkit::Rational(-1));
            if (format == "json") {
                ordered_json j;
                if (!fan.name.empty()) j["name"] = fan.name;
                j["K"] = detail.ok;
                j["-K"] = anti.ok;
                j["detail"] = coxkit::to_ordered_json(detail);
                emit_json(j);
            } else {
                std::cout << "lefschetz K: " << (detail.ok ? "yes" : "no") << "\n";
                std::cout << "lefschetz -K: " << (anti.ok ? "yes" : "no") << "\n";
                for (const auto& level : detail.levels)
                    std::cout << "  degree " << level.lower << " -> " << level.upper << ": rank "
                              << level.rank_found << " of " << level.rank_needed << " ("
                              << (level.ok ? "ok" : "fails") << ")\n";
            }
            return kExitOk;
        }

        if (cmd_surface->parsed()) {
            coxkit::RationalSurfaceModel model;
            if (!surface_spec_path.empty()) {
                model = coxkit::surface_model_from_json(read_file(surface_spec_path));
            } else {
                model.base = surface_base == "P2" ? coxkit::SurfaceBaseKind::P2
                                                  : coxkit::SurfaceBaseKind::Hirzebruch;
                if (model.base == coxkit::SurfaceBaseKind::P2 && a_opt->count() > 0)
                    throw InputError("--a only applies to the Hirzebruch base");
                if (hirzebruch_a < 0) throw InputError("--a must be >= 0");
                model.a = hirzebruch_a;
                model.blowups = blowups;
            }
            const auto report = coxkit::surface_coxeter(model);
            ordered_json extra;
            if (emit_psi) {
                const auto psi = coxkit::surface_psi_matrix(coxkit::build_surface_chow(model));
                extra["psi"] = coxkit::to_ordered_json(psi);
            }
            emit_report(report, format, extra);
            return check_report(report);
        }

        if (cmd_tensor->parsed()) {
            std::string joined;
            for (const auto& token : tensor_tokens) {
                joined += token;
                joined += ' ';
            }
            const auto factors = coxkit::parse_jordan_factors(joined);
            std::size_t zero_count = 0;
            for (const auto& f : factors) zero_count += f.eigenvalue == 0 ? 1 : 0;

            JordanSum closed;
            if (zero_count == 0) {
                closed = coxkit::box_many(factors);
            } else {
                closed.add(factors[0].eigenvalue, factors[0].size);
                for (std::size_t i = 1; i < factors.size(); ++i) {
                    JordanSum single;
                    single.add(factors[i].eigenvalue, factors[i].size);
                    closed = coxkit::box_sums(closed, single);
                }
            }
            const std::string note =
                zero_count >= 2 ? "zero-zero products use the ceiling bracket reading" : "";

            bool oracle_match = true;
            JordanSum oracle;
            if (run_oracle) {
                oracle = coxkit::brute_force_box(factors, cap);
                oracle_match = oracle == closed;
            }

            if (format == "json") {
                ordered_json j;
                j["factors"] = nlohmann::json::array();
                for (const auto& f : factors)
                    j["factors"].push_back("J(" + coxkit::to_string(f.eigenvalue) + "," +
                                           std::to_string(f.size) + ")");
                j["jordan"] = coxkit::to_ordered_json(closed);
                j["dimension"] = closed.total_dimension();
                if (!note.empty()) j["note"] = note;
                if (run_oracle) {
                    j["oracle"] = coxkit::to_ordered_json(oracle);
                    j["oracle_match"] = oracle_match;
                }
                emit_json(j);
            } else {
                std::cout << "jordan: " << closed.to_string() << "\n";
                if (!note.empty()) std::cout << "note: " << note << "\n";
                if (run_oracle)
                    std::cout << "oracle: " << oracle.to_string() << " ("
                              << (oracle_match ? "match" : "MISMATCH") << ")\n";
            }
            if (!oracle_match) throw CrossCheckFailure("closed form disagrees with the oracle");
            return kExitOk;
        }

        if (cmd_product->parsed()) {
            const Fan product = coxkit::product_fan(load_fan(product_x), load_fan(product_y));
            write_output(coxkit::fan_to_json(product), out_path);
            return kExitOk;
        }

        if (cmd_blowup->parsed()) {
            const Fan result = coxkit::star_subdivide(load_fan(fan_path), blowup_cone);
            write_output(coxkit::fan_to_json(result), out_path);
            return kExitOk;
        }

        if (cmd_cartan->parsed()) {
            const std::string text = read_file(cartan_path);
            std::vector<std::vector<long long>> rows;
            std::istringstream lines(text);
            std::string line;
            while (std::getline(lines, line)) {
                std::istringstream fields(line);
                std::vector<long long> row;
                long long x;
                while (fields >> x) row.push_back(x);
                if (!row.empty()) rows.push_back(row);
            }
            if (rows.empty()) throw InputError("empty matrix in '" + cartan_path + "'");
            for (const auto& row : rows)
                if (row.size() != rows.size())
                    throw InputError("matrix in '" + cartan_path + "' is not square");
            const auto phi = coxkit::coxeter_of_cartan(coxkit::RationalMatrix::from_int_rows(rows));

            long long certified_mu = 0;
            for (const long long mu : {1LL, -1LL}) {
                coxkit::RationalMatrix shifted = phi;
                for (std::size_t i = 0; i < shifted.rows(); ++i) shifted.at(i, i) -= mu;
                if (coxkit::nilpotency_index(shifted)) {
                    certified_mu = mu;
                    break;
                }
            }
            ordered_json j;
            j["coxeter_matrix"] = coxkit::to_ordered_json(phi);
            coxkit::JordanSum jordan;
            std::string poly_text;
            if (certified_mu != 0) {
                const coxkit::CoxeterPolynomial poly{phi.rows(), static_cast<int>(-certified_mu),
                                                     true};
                poly_text = poly.to_string();
                jordan = coxkit::full_jordan_type(phi, {coxkit::Rational(certified_mu)});
                j["coxeter_polynomial"] = poly_text;
                j["verified"] = true;
                j["jordan"] = coxkit::to_ordered_json(jordan);
            } else {
                j["coxeter_polynomial"] = nullptr;
                j["verified"] = false;
                j["note"] = "eigenvalues are not a single value in {1,-1}";
            }
            if (format == "json") {
                emit_json(j);
            } else {
                std::cout << "coxeter matrix:\n" << phi.to_string() << "\n";
                if (certified_mu != 0) {
                    std::cout << "coxeter polynomial: " << poly_text << " (verified)\n";
                    std::cout << "jordan: " << jordan.to_string() << "\n";
                } else {
                    std::cout << "note: eigenvalues are not a single value in {1,-1}\n";
                }
            }
            return kExitOk;
        }

        if (cmd_reproduce->parsed()) {
            const auto result = coxkit::reproduce_table(table_name, cap);
            emit_table(result, format);
            if (!result.ok()) throw CrossCheckFailure("table '" + table_name + "' has mismatches");
            return kExitOk;
        }
    } catch (const CrossCheckFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const coxkit::VerificationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const coxkit::IncompleteSpectrumError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        // remaining library errors are semantic: invalid fans, bad cones,
        // degree violations, caps
        std::cerr << "error: " << e.what() << "\n";
        return kExitSemantic;
    }
    return kExitOk;
}
