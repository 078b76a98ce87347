#include "cli.hpp"

#include <algorithm>
#include <memory>

#include <CLI11.hpp>

#include "lieq/lieq.h"

namespace lieq_cli {

namespace {

using AlgebraPtr = std::unique_ptr<lieq_algebra, decltype(&lieq_algebra_free)>;
using ReportPtr = std::unique_ptr<lieq_report, decltype(&lieq_report_free)>;

std::string take(char* s) {
    std::string out = s ? s : "";
    lieq_string_free(s);
    return out;
}

struct Emitter {
    lieq_format format = LIEQ_FORMAT_TEXT;
    RunResult result;

    void report(lieq_report* raw) {
        ReportPtr r(raw, lieq_report_free);
        char* text = nullptr;
        if (lieq_report_render(r.get(), format, &text) != LIEQ_OK) {
            error("", "", lieq_last_error());
            return;
        }
        result.exit_code = lieq_report_exit_code(r.get());
        // Errors go to stderr in text mode; the machine document is always stdout.
        if (result.exit_code == 2 && format == LIEQ_FORMAT_TEXT)
            result.err += take(text);
        else
            result.out += take(text);
    }

    void error(const std::string& verb, const std::string& source, const std::string& message) {
        lieq_report* r = nullptr;
        if (lieq_error_report(verb.c_str(), source.c_str(), message.c_str(), &r) != LIEQ_OK) {
            result.err += "error: " + message + "\n";
            result.exit_code = 2;
            return;
        }
        report(r);
    }
};

} // namespace

RunResult run(const std::vector<std::string>& args) {
    CLI::App app{"Exact Lie algebra workbench", "lieq"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));

    std::string src;
    auto* check = app.add_subcommand("check", "Show the brackets and run the Jacobi check");
    check->add_option("src", src, "File path or catalog:<name>")->required();

    std::size_t split = 0;
    std::string v_path;
    std::string route = "both";
    auto* contract = app.add_subcommand("contract", "Contract with a first sector of size r");
    contract->add_option("src", src, "File path or catalog:<name>")->required();
    contract->add_option("--split", split, "First-sector size r")->required();
    contract->add_option("--v", v_path, "r x r matrix file");
    contract->add_option("--route", route, "formula, symbolic or both")
        ->check(CLI::IsMember({"formula", "symbolic", "both"}));

    auto* rsets = app.add_subcommand("rsets", "R-sets and flagged generators");
    rsets->add_option("src", src, "File path or catalog:<name>")->required();

    auto* h2 = app.add_subcommand("h2", "Second cohomology and charge elimination");
    h2->add_option("src", src, "File path or catalog:<name>")->required();

    std::string which;
    auto* rep = app.add_subcommand("rep-verify", "Four-index representation checks");
    rep->add_option("which", which, "lorentz or sim2")->required()->check(CLI::IsMember({"lorentz", "sim2"}));

    auto* inhom = app.add_subcommand("inhom-solve", "Solve for the translation-sector coefficients");

    std::string name;
    auto* cat = app.add_subcommand("catalog", "Print a built-in algebra definition");
    cat->add_option("name", name, "Catalog name")->required();

    std::string ideal;
    auto* quotient = app.add_subcommand("quotient", "Quotient by an ideal");
    quotient->add_option("src", src, "File path or catalog:<name>")->required();
    quotient->add_option("--ideal", ideal, "Comma-separated generators")->required();

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    Emitter emit;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        emit.result.out = app.help();
        return emit.result;
    } catch (const CLI::CallForAllHelp&) {
        emit.result.out = app.help("", CLI::AppFormatMode::All);
        return emit.result;
    } catch (const CLI::ParseError& e) {
        if (std::find(args.begin(), args.end(), "machine") != args.end())
            emit.format = LIEQ_FORMAT_MACHINE;
        std::string verb;
        for (auto* sub : app.get_subcommands())
            verb = sub->get_name();
        emit.error(verb, "", std::string("usage: ") + e.what());
        return emit.result;
    }
    emit.format = format == "machine" ? LIEQ_FORMAT_MACHINE : LIEQ_FORMAT_TEXT;

    auto* sub = app.get_subcommands().front();
    const std::string verb = sub->get_name();
    lieq_report* out = nullptr;
    lieq_status status = LIEQ_OK;

    if (sub == rep) {
        status = lieq_rep_verify(which.c_str(), &out);
    } else if (sub == inhom) {
        status = lieq_inhom_solve(&out);
    } else if (sub == cat) {
        status = lieq_catalog(name.c_str(), &out);
        src = name;
    } else {
        lieq_algebra* raw = nullptr;
        if (lieq_algebra_load(src.c_str(), &raw) != LIEQ_OK) {
            emit.error(verb, src, lieq_last_error());
            return emit.result;
        }
        AlgebraPtr algebra(raw, lieq_algebra_free);
        if (sub == check) {
            status = lieq_check(algebra.get(), src.c_str(), &out);
        } else if (sub == contract) {
            const auto rt = route == "formula" ? LIEQ_ROUTE_FORMULA
                            : route == "symbolic" ? LIEQ_ROUTE_SYMBOLIC
                                                  : LIEQ_ROUTE_BOTH;
            status = lieq_contract(algebra.get(), src.c_str(), split, v_path.empty() ? nullptr : v_path.c_str(), rt,
                                   &out);
        } else if (sub == rsets) {
            status = lieq_rsets(algebra.get(), src.c_str(), &out);
        } else if (sub == h2) {
            status = lieq_h2(algebra.get(), src.c_str(), &out);
        } else if (sub == quotient) {
            status = lieq_quotient(algebra.get(), src.c_str(), ideal.c_str(), &out);
        }
    }
    if (status != LIEQ_OK) {
        emit.error(verb, src, lieq_last_error());
        return emit.result;
    }
    emit.report(out);
    return emit.result;
}

} // namespace lieq_cli
