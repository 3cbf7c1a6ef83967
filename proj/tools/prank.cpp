#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "prank/curvespec.hpp"
#include "prank/tomlite.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw prank::spec_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_or_print(const nlohmann::json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw prank::spec_error("cannot write file: " + out_path);
        out << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-rank, a-number and ordinariness of curves in characteristic p"};
    app.require_subcommand(1);

    std::string file, json_out, csv_out;
    bool emit_matrices = false;
    int zeta_max_ext = 12;
    int max_ext = 0;
    std::vector<std::string> range_args, where_args;

    auto* inv = app.add_subcommand("invariants", "compute the invariant report for a curve file");
    inv->add_option("file", file, "curve file (TOML)")->required();
    inv->add_option("--json", json_out, "write the report to a file instead of stdout");
    inv->add_flag("--emit-matrices", emit_matrices, "include matrices in the report");

    auto* ver = app.add_subcommand("verify", "cross-check Frobenius against Cartier and point counts");
    ver->add_option("file", file, "curve file (TOML)")->required();
    ver->add_option("--zeta-max-ext", zeta_max_ext, "largest extension degree for point counting");

    auto* zet = app.add_subcommand("zeta", "point counts and zeta numerator");
    zet->add_option("file", file, "curve file (TOML)")->required();
    zet->add_option("--max-ext", max_ext, "count points over F_q^1 .. F_q^N")->required();

    auto* swp = app.add_subcommand("sweep", "batch sweep over coefficient placeholders");
    swp->add_option("template", file, "curve template file (TOML)")->required();
    swp->add_option("--range", range_args, "NAME=v1,v2,... or NAME=* (all nonzero)");
    swp->add_option("--where", where_args, "filter predicate, e.g. \"A!=B\"");
    swp->add_option("--csv", csv_out, "write CSV here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        std::string content = slurp(file);
        std::string hash = prank::fnv1a_hex(content);
        prank::CurveSpec spec = prank::curvespec_from_json(prank::toml_parse(content));

        if (inv->parsed()) {
            write_or_print(prank::run_invariants(spec, emit_matrices, hash), json_out);
        } else if (ver->parsed()) {
            nlohmann::json rep = prank::run_verify(spec, zeta_max_ext, hash);
            write_or_print(rep, "");
            if (!rep.at("pass").get<bool>()) return 1;
        } else if (zet->parsed()) {
            write_or_print(prank::run_zeta(spec, max_ext), "");
        } else if (swp->parsed()) {
            auto ctx = prank::field_make(
                spec.p, spec.k, spec.modulus.value_or(std::vector<std::uint64_t>{}));
            std::vector<prank::SweepRange> ranges;
            for (const auto& r : range_args) ranges.push_back(prank::parse_range(r, ctx.get()));
            std::vector<prank::SweepPredicate> preds;
            for (const auto& w : where_args) preds.push_back(prank::parse_predicate(w));
            std::string csv = prank::run_sweep(spec, std::move(ranges), preds);
            if (csv_out.empty()) {
                std::cout << csv;
            } else {
                std::ofstream out(csv_out);
                if (!out) throw prank::spec_error("cannot write file: " + csv_out);
                out << csv;
            }
        }
    } catch (const prank::spec_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const prank::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
