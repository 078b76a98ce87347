#include "lieq/lieq.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "lieq/catalog.hpp"
#include "lieq/report.hpp"
#include "lieq/text_format.hpp"

struct lieq_algebra {
    lieq::LieAlgebra algebra;
    std::vector<std::string> warnings;
};

struct lieq_report {
    lieq::Report report;
};

namespace {

thread_local std::string last_error;

lieq_status fail(lieq_status s, const std::string& message) {
    last_error = message;
    return s;
}

char* duplicate(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs f, mapping library exceptions onto status codes.
template <typename F>
lieq_status guarded(F&& f) {
    try {
        last_error.clear();
        f();
        return LIEQ_OK;
    } catch (const lieq::ParseError& e) {
        return fail(LIEQ_ERR_PARSE, e.what());
    } catch (const lieq::UnknownAlgebra& e) {
        return fail(LIEQ_ERR_UNKNOWN_ALGEBRA, e.what());
    } catch (const lieq::SingularMap& e) {
        return fail(LIEQ_ERR_SINGULAR, e.what());
    } catch (const lieq::NotContractible& e) {
        return fail(LIEQ_ERR_NOT_CONTRACTIBLE, e.what());
    } catch (const lieq::NotAnIdeal& e) {
        return fail(LIEQ_ERR_NOT_AN_IDEAL, e.what());
    } catch (const lieq::InvalidArgument& e) {
        return fail(LIEQ_ERR_INVALID_ARGUMENT, e.what());
    } catch (const lieq::AlgebraMismatch& e) {
        return fail(LIEQ_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(LIEQ_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(LIEQ_ERR_INTERNAL, "unknown error");
    }
}

bool null_args(const void* a, const void* b) { return a == nullptr || b == nullptr; }

lieq_status emit_report(lieq_report** out, lieq::Report r) {
    *out = new lieq_report{std::move(r)};
    return LIEQ_OK;
}

std::string label(const char* source) { return source ? source : ""; }

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    if (s.empty())
        return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(item);
    return out;
}

} // namespace

extern "C" {

const char* lieq_last_error(void) { return last_error.c_str(); }

lieq_status lieq_algebra_from_catalog(const char* name, lieq_algebra** out) {
    if (null_args(name, out))
        return fail(LIEQ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = new lieq_algebra{lieq::catalog(name), {}}; });
}

lieq_status lieq_algebra_parse(const char* text, const char* source_name, lieq_algebra** out) {
    if (null_args(text, out))
        return fail(LIEQ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto parsed = lieq::parse_algebra(text, source_name ? source_name : "<input>");
        *out = new lieq_algebra{std::move(parsed.algebra), std::move(parsed.warnings)};
    });
}

lieq_status lieq_algebra_load(const char* src, lieq_algebra** out) {
    if (null_args(src, out))
        return fail(LIEQ_ERR_INVALID_ARGUMENT, "null argument");
    const std::string s = src;
    const std::string prefix = "catalog:";
    if (s.rfind(prefix, 0) == 0)
        return lieq_algebra_from_catalog(s.c_str() + prefix.size(), out);
    return guarded([&] {
        auto parsed = lieq::load_algebra_file(s);
        *out = new lieq_algebra{std::move(parsed.algebra), std::move(parsed.warnings)};
    });
}

void lieq_algebra_free(lieq_algebra* algebra) { delete algebra; }

size_t lieq_algebra_dim(const lieq_algebra* algebra) { return algebra ? algebra->algebra.dim() : 0; }

const char* lieq_algebra_generator(const lieq_algebra* algebra, size_t k) {
    if (!algebra || k >= algebra->algebra.dim())
        return nullptr;
    return algebra->algebra.generator(k).c_str();
}

int lieq_algebra_jacobi_verified(const lieq_algebra* algebra) {
    return algebra && algebra->algebra.jacobi_verified() ? 1 : 0;
}

size_t lieq_algebra_warning_count(const lieq_algebra* algebra) { return algebra ? algebra->warnings.size() : 0; }

const char* lieq_algebra_warning(const lieq_algebra* algebra, size_t k) {
    if (!algebra || k >= algebra->warnings.size())
        return nullptr;
    return algebra->warnings[k].c_str();
}

lieq_status lieq_algebra_bracket(const lieq_algebra* algebra, size_t a, size_t b, char** out) {
    if (null_args(algebra, out))
        return fail(LIEQ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const auto& alg = algebra->algebra;
        *out = duplicate(lieq::format_combination(alg, alg.tensor().get(a, b)));
    });
}

lieq_status lieq_algebra_emit(const lieq_algebra* algebra, char** out) {
    if (null_args(algebra, out))
        return fail(LIEQ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { *out = duplicate(lieq::emit_algebra(algebra->algebra)); });
}

int lieq_algebra_equal(const lieq_algebra* a, const lieq_algebra* b) {
    return a && b && a->algebra == b->algebra ? 1 : 0;
}

lieq_status lieq_check(const lieq_algebra* algebra, const char* source, lieq_report** out) {
    if (null_args(algebra, out))
        return fail(LIEQ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto r = lieq::check_report(algebra->algebra, label(source));
        r.warnings = algebra->warnings;
        emit_report(out, std::move(r));
    });
}

lieq_status lieq_contract(const lieq_algebra* algebra, const char* source, size_t r, const char* v_path,
                          lieq_route route, lieq_report** out) {
    if (null_args(algebra, out))
        return fail(LIEQ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        lieq::SectorSplit split{r, std::nullopt};
        if (v_path)
            split.v = lieq::load_matrix_file(v_path);
        const auto rt = route == LIEQ_ROUTE_FORMULA    ? lieq::ContractRoute::Formula
                        : route == LIEQ_ROUTE_SYMBOLIC ? lieq::ContractRoute::Symbolic
                                                       : lieq::ContractRoute::Both;
        auto rep = lieq::contract_report(algebra->algebra, label(source), split, rt);
        rep.warnings = algebra->warnings;
        emit_report(out, std::move(rep));
    });
}

lieq_status lieq_quotient(const lieq_algebra* algebra, const char* source, const char* ideal, lieq_report** out) {
    if (null_args(algebra, out) || ideal == nullptr)
        return fail(LIEQ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto rep = lieq::quotient_report(algebra->algebra, label(source), split_csv(ideal));
        rep.warnings = algebra->warnings;
        emit_report(out, std::move(rep));
    });
}

lieq_status lieq_rsets(const lieq_algebra* algebra, const char* source, lieq_report** out) {
    if (null_args(algebra, out))
        return fail(LIEQ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto rep = lieq::rsets_report(algebra->algebra, label(source));
        rep.warnings = algebra->warnings;
        emit_report(out, std::move(rep));
    });
}

lieq_status lieq_h2(const lieq_algebra* algebra, const char* source, lieq_report** out) {
    if (null_args(algebra, out))
        return fail(LIEQ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        auto rep = lieq::h2_report(algebra->algebra, label(source));
        rep.warnings.insert(rep.warnings.begin(), algebra->warnings.begin(), algebra->warnings.end());
        emit_report(out, std::move(rep));
    });
}

lieq_status lieq_rep_verify(const char* which, lieq_report** out) {
    if (null_args(which, out))
        return fail(LIEQ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { emit_report(out, lieq::rep_verify_report(which)); });
}

lieq_status lieq_inhom_solve(lieq_report** out) {
    if (out == nullptr)
        return fail(LIEQ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { emit_report(out, lieq::inhom_solve_report()); });
}

lieq_status lieq_catalog(const char* name, lieq_report** out) {
    if (null_args(name, out))
        return fail(LIEQ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { emit_report(out, lieq::catalog_report(name)); });
}

lieq_status lieq_error_report(const char* verb, const char* source, const char* message, lieq_report** out) {
    if (out == nullptr)
        return fail(LIEQ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { emit_report(out, lieq::error_report(label(verb), label(source), label(message))); });
}

lieq_status lieq_report_render(const lieq_report* report, lieq_format format, char** out) {
    if (null_args(report, out))
        return fail(LIEQ_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = duplicate(lieq::render(report->report, format == LIEQ_FORMAT_MACHINE ? lieq::ReportFormat::Machine
                                                                                    : lieq::ReportFormat::Text));
    });
}

int lieq_report_exit_code(const lieq_report* report) { return report ? report->report.exit_code : 2; }

const char* lieq_report_verdict(const lieq_report* report) {
    return report ? report->report.verdict.c_str() : "error";
}

void lieq_report_free(lieq_report* report) { delete report; }

void lieq_string_free(char* s) { std::free(s); }

} // extern "C"
