#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "conifold/partition_functions.hpp"
#include "conifold/serialize.hpp"
#include "conifold/weightpoly.hpp"

namespace {

using conifold::Box;
using conifold::Chamber;
using conifold::Report;

struct Opts {
    int qmax = 8;
    int tmax = 4;
    std::string chamber = "pt";
    std::string format;
    std::string output;
    std::string report;
    std::vector<int> flip;
};

std::string chamber_validator(std::string& s) {
    if (s == "pt") return {};
    if (s.empty() || s.size() > 6) return "chamber must be \"pt\" or a nonnegative integer";
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return "chamber must be \"pt\" or a nonnegative integer";
    return {};
}

void add_box_opts(CLI::App* cmd, Opts& o) {
    cmd->add_option("--qmax", o.qmax, "bound on the q-degree")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_option("--tmax", o.tmax, "bound on the T-degree")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_option("--chamber", o.chamber, "stability chamber, \"pt\" or a nonnegative integer")
        ->check(CLI::Validator(chamber_validator, "CHAMBER"))
        ->capture_default_str();
}

Chamber to_chamber(const std::string& s) {
    return s == "pt" ? Chamber::pt() : Chamber::index(std::stoi(s));
}

int write_out(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    f << text;
    if (!f.good()) {
        std::cerr << "error: cannot write " << path << "\n";
        return 2;
    }
    return 0;
}

int run_table(const Opts& o) {
    const auto table = conifold::invariant_table(Box{o.qmax, o.tmax}, to_chamber(o.chamber));
    std::string text;
    if (o.format == "json")
        text = conifold::table_to_json(table).dump(2) + "\n";
    else if (o.format == "csv")
        text = conifold::table_to_csv(table);
    else
        text = conifold::table_to_text(table);
    return write_out(text, o.output);
}

int run_verify(const Opts& o, const std::string& which) {
    const Box box{o.qmax, o.tmax};
    std::optional<conifold::FactorFlip> flip;
    if (!o.flip.empty()) flip = conifold::FactorFlip{o.flip[0], o.flip[1]};

    std::vector<Report> reports;
    if (which == "all" || which == "inverse")
        reports.push_back(conifold::verify_inverse_identity(box, flip));
    if (which == "all" || which == "exterior")
        reports.push_back(conifold::verify_exterior_identity(box, to_chamber(o.chamber), flip));
    if (which == "all" || which == "topstring")
        reports.push_back(conifold::verify_topstring(box, flip));
    if (which == "all" || which == "sl2")
        reports.push_back(conifold::verify_sl2_positivity(box, flip));

    bool ok = true;
    for (const Report& r : reports) ok = ok && r.ok;

    nlohmann::json arr = nlohmann::json::array();
    for (const Report& r : reports) arr.push_back(conifold::report_to_json(r));

    std::string text;
    if (o.format == "json")
        text = arr.dump(2) + "\n";
    else
        for (const Report& r : reports) text += conifold::report_to_text(r);
    if (int rc = write_out(text, o.output); rc != 0) return rc;
    if (!o.report.empty())
        if (int rc = write_out(arr.dump(2) + "\n", o.report); rc != 0) return rc;
    return ok ? 0 : 1;
}

int run_weightpoly(const std::string& expr, const std::string& output) {
    try {
        const auto p = conifold::parse_weight_expr(expr);
        return write_out(conifold::to_t_string(p) + "\n", output);
    } catch (const conifold::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Refined stable-pairs invariants of the resolved conifold: "
                 "tables, identity checks, weight polynomials"};
    app.require_subcommand(1);

    Opts o;

    CLI::App* table = app.add_subcommand("refined-table", "print the refined invariant table");
    add_box_opts(table, o);
    table->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->default_val("text");
    table->add_option("--output", o.output, "write to a file instead of standard output");

    CLI::App* verify = app.add_subcommand("verify", "check the partition-function identities");
    std::string which = "all";
    verify->add_option("which", which, "which identity to check")
        ->check(CLI::IsMember({"all", "inverse", "exterior", "topstring", "sl2"}));
    add_box_opts(verify, o);
    verify->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->default_val("text");
    verify->add_option("--output", o.output, "write to a file instead of standard output");
    verify->add_option("--report", o.report, "also write a JSON report to this path");
    verify->add_option("--flip-sign", o.flip)->expected(2)->group("");

    CLI::App* weight = app.add_subcommand("weightpoly", "evaluate a weight-polynomial expression");
    std::string expr;
    weight->add_option("expr", expr, "expression, e.g. blowup(product(A1,Gm))")->required();
    weight->add_option("--output", o.output, "write to a file instead of standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (table->parsed()) return run_table(o);
        if (verify->parsed()) return run_verify(o, which);
        if (weight->parsed()) return run_weightpoly(expr, o.output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
