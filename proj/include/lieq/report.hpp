#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieq/algebra.hpp"
#include "lieq/contraction.hpp"

namespace lieq {

struct ReportSection {
    std::string title;
    std::vector<std::vector<std::string>> rows;
};

/// Result of one command. Exit codes: 0 success, 1 analytic failure,
/// 2 usage or parse error.
struct Report {
    std::string verb;
    std::string source;
    std::string verdict; // pass | fail | value | error
    int exit_code = 0;
    std::vector<std::string> warnings;
    std::vector<ReportSection> sections;
    std::optional<std::string> body;

    ReportSection& section(std::string title);
};

enum class ReportFormat { Text, Machine };

std::string render(const Report& report, ReportFormat format);

enum class ContractRoute { Formula, Symbolic, Both };

Report check_report(const LieAlgebra& algebra, const std::string& source);
Report contract_report(const LieAlgebra& algebra, const std::string& source, const SectorSplit& split,
                       ContractRoute route);
Report quotient_report(const LieAlgebra& algebra, const std::string& source,
                       const std::vector<std::string>& ideal);
Report rsets_report(const LieAlgebra& algebra, const std::string& source);
Report h2_report(const LieAlgebra& algebra, const std::string& source);
/// which: "lorentz" or "sim2"; anything else throws InvalidArgument.
Report rep_verify_report(const std::string& which);
Report inhom_solve_report();
Report catalog_report(const std::string& name);
Report error_report(const std::string& verb, const std::string& source, const std::string& message);

} // namespace lieq
