#include "lieq/report.hpp"

#include <json.hpp>

#include "lieq/catalog.hpp"
#include "lieq/projective.hpp"
#include "lieq/tensor_rep.hpp"
#include "lieq/text_format.hpp"

namespace lieq {

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }
std::string pass_fail(bool b) { return b ? "pass" : "fail"; }

std::string bracket_label(const LieAlgebra& a, std::size_t i, std::size_t j) {
    return "[" + a.generator(i) + "," + a.generator(j) + "]";
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t k = 0; k < items.size(); ++k)
        out += (k ? sep : "") + items[k];
    return out;
}

void add_brackets(ReportSection& s, const LieAlgebra& a) {
    for (const auto& [key, value] : a.tensor().entries())
        s.rows.push_back({bracket_label(a, key.first, key.second), "=", format_combination(a, value)});
}

void add_violations(ReportSection& s, const LieAlgebra& a, const std::vector<IndexTriple>& triples) {
    for (const auto& t : triples)
        s.rows.push_back({"C(" + a.generator(t.i) + "," + a.generator(t.j) + ";" + a.generator(t.k) + ")", "=",
                          a.tensor().at(t.i, t.j, t.k).to_string()});
}

// "T1 + C(T1,K3)" style linear combination of charges appended to a label.
std::string shift_expression(const LieAlgebra& a, const GeneratorShift& shift, const Scalar& factor) {
    const auto pairs = form_pairs(a.dim());
    std::string out = a.generator(shift.generator);
    for (const auto& [p, coef] : shift.terms) {
        const Scalar c = coef * factor;
        std::string tok = c.to_string();
        const bool negative = tok.front() == '-';
        if (negative)
            tok = (-c).to_string();
        out += negative ? " - " : " + ";
        const std::string name = "C(" + a.generator(pairs[p].first) + "," + a.generator(pairs[p].second) + ")";
        out += tok == "1" ? name : tok + "*" + name;
    }
    return out;
}

} // namespace

ReportSection& Report::section(std::string title) {
    sections.push_back({std::move(title), {}});
    return sections.back();
}

std::string render(const Report& report, ReportFormat format) {
    if (format == ReportFormat::Machine) {
        nlohmann::ordered_json doc;
        doc["verb"] = report.verb;
        doc["source"] = report.source;
        doc["verdict"] = report.verdict;
        doc["exit_code"] = report.exit_code;
        doc["warnings"] = report.warnings;
        auto sections = nlohmann::ordered_json::array();
        for (const auto& s : report.sections) {
            nlohmann::ordered_json js;
            js["title"] = s.title;
            js["rows"] = s.rows;
            sections.push_back(std::move(js));
        }
        doc["sections"] = std::move(sections);
        doc["body"] = report.body ? nlohmann::ordered_json(*report.body) : nlohmann::ordered_json(nullptr);
        return doc.dump(2) + "\n";
    }
    if (report.sections.empty() && report.body && report.warnings.empty())
        return *report.body;
    std::string out = report.verb;
    if (!report.source.empty())
        out += " " + report.source;
    out += "\nverdict: " + report.verdict + "\n";
    for (const auto& w : report.warnings)
        out += "warning: " + w + "\n";
    for (const auto& s : report.sections) {
        out += "\n== " + s.title + " ==\n";
        for (const auto& row : s.rows)
            out += join(row, " ") + "\n";
    }
    if (report.body)
        out += "\n" + *report.body;
    return out;
}

Report check_report(const LieAlgebra& algebra, const std::string& source) {
    Report r{"check", source, "pass", 0, {}, {}, {}};
    auto& info = r.section("algebra");
    info.rows.push_back({"name", "=", algebra.name()});
    info.rows.push_back({"dim", "=", std::to_string(algebra.dim())});
    info.rows.push_back({"generators", "=", join(algebra.generators(), " ")});
    add_brackets(r.section("brackets"), algebra);
    const JacobiReport jr = check_jacobi(algebra);
    auto& js = r.section("jacobi");
    js.rows.push_back({"jacobi", "=", pass_fail(jr.passed)});
    for (const auto& v : jr.violations)
        js.rows.push_back({"(" + algebra.generator(v.triple.i) + "," + algebra.generator(v.triple.j) + "," +
                               algebra.generator(v.triple.k) + ")",
                           "residual", format_combination(algebra, v.residual)});
    if (!jr.passed) {
        r.verdict = "fail";
        r.exit_code = 1;
    }
    return r;
}

Report contract_report(const LieAlgebra& algebra, const std::string& source, const SectorSplit& split,
                       ContractRoute route) {
    split.validate(algebra.dim());
    Report r{"contract", source, "pass", 0, {}, {}, {}};
    auto& sp = r.section("split");
    std::vector<std::string> first(algebra.generators().begin(), algebra.generators().begin() + split.r);
    std::vector<std::string> second(algebra.generators().begin() + split.r, algebra.generators().end());
    sp.rows.push_back({"r", "=", std::to_string(split.r)});
    sp.rows.push_back({"first sector", "=", join(first, " ")});
    sp.rows.push_back({"second sector", "=", join(second, " ")});
    sp.rows.push_back({"v", "=", split.v ? "given" : "zero"});

    const char* route_name = route == ContractRoute::Formula ? "formula"
                             : route == ContractRoute::Symbolic ? "symbolic"
                                                                : "both";
    std::optional<ContractionReport> result;
    std::optional<std::vector<IndexTriple>> formula_fail, symbolic_fail;
    if (route != ContractRoute::Symbolic) {
        try {
            result = contract_formula(algebra, split);
        } catch (const NotContractible& e) {
            formula_fail = e.triples();
        }
    }
    if (route != ContractRoute::Formula) {
        try {
            result = contract_symbolic(algebra, split);
        } catch (const NotContractible& e) {
            symbolic_fail = e.triples();
        }
    }
    auto& routes = r.section("routes");
    routes.rows.push_back({"route", "=", route_name});

    if (formula_fail || symbolic_fail) {
        r.verdict = "fail";
        r.exit_code = 1;
        if (route == ContractRoute::Both)
            routes.rows.push_back({"routes agree on violations", "=", yes_no(formula_fail == symbolic_fail)});
        add_violations(r.section("violations"), algebra, formula_fail ? *formula_fail : *symbolic_fail);
        return r;
    }
    if (result->route_agreement) {
        routes.rows.push_back({"route_agreement", "=", yes_no(*result->route_agreement)});
        if (!*result->route_agreement) {
            r.verdict = "fail";
            r.exit_code = 1;
        }
    }
    const LieAlgebra& c = result->contracted;
    add_brackets(r.section("contracted brackets"), c);
    auto& st = r.section("structure");
    st.rows.push_back({"jacobi", "=", pass_fail(c.jacobi_verified())});
    std::vector<std::size_t> second_idx;
    for (std::size_t k = split.r; k < c.dim(); ++k)
        second_idx.push_back(k);
    const IdealReport ideal = verify_ideal(c, second_idx);
    st.rows.push_back({"second sector ideal", "=", yes_no(ideal.ideal)});
    st.rows.push_back({"second sector abelian", "=", yes_no(ideal.abelian)});
    r.body = emit_algebra(c);
    return r;
}

Report quotient_report(const LieAlgebra& algebra, const std::string& source, const std::vector<std::string>& ideal) {
    std::vector<std::size_t> idx;
    for (const auto& g : ideal)
        idx.push_back(algebra.index_of(g));
    Report r{"quotient", source, "pass", 0, {}, {}, {}};
    const IdealReport ir = verify_ideal(algebra, idx);
    auto& s = r.section("ideal");
    s.rows.push_back({"subset", "=", ideal.empty() ? "none" : join(ideal, " ")});
    s.rows.push_back({"ideal", "=", yes_no(ir.ideal)});
    s.rows.push_back({"abelian", "=", yes_no(ir.abelian)});
    if (!ir.ideal) {
        r.verdict = "fail";
        r.exit_code = 1;
        return r;
    }
    const LieAlgebra q = quotient_algebra(algebra, idx);
    add_brackets(r.section("quotient brackets"), q);
    r.body = emit_algebra(q);
    return r;
}

Report rsets_report(const LieAlgebra& algebra, const std::string& source) {
    Report r{"rsets", source, "value", 0, {}, {}, {}};
    const RSetReport rs = r_sets(algebra);
    auto& s = r.section("R-sets");
    for (std::size_t b = 0; b < algebra.dim(); ++b) {
        std::vector<std::string> basis;
        for (const auto& v : rs.per_generator[b])
            basis.push_back(format_combination(algebra, v));
        s.rows.push_back({"R(" + algebra.generator(b) + ")", "=", "span{" + join(basis, ", ") + "}"});
    }
    std::vector<std::string> flagged;
    for (auto g : rs.flagged)
        flagged.push_back(algebra.generator(g));
    r.section("flagged").rows.push_back({"flagged", "=", flagged.empty() ? "none" : join(flagged, ", ")});
    return r;
}

Report h2_report(const LieAlgebra& algebra, const std::string& source) {
    Report r{"h2", source, "value", 0, {}, {}, {}};
    if (!algebra.jacobi_verified())
        r.warnings.push_back("algebra fails the Jacobi identity; cohomology is not meaningful");
    const CohomologyReport h = h2(algebra);
    const Scalar factor = charge_factor(algebra);
    const auto pairs = form_pairs(algebra.dim());

    auto& d = r.section("dimensions");
    d.rows.push_back({"dim Z2", "=", std::to_string(h.dim_Z2)});
    d.rows.push_back({"dim B2", "=", std::to_string(h.dim_B2)});
    d.rows.push_back({"dim H2", "=", std::to_string(h.dim_H2)});

    r.section("convention").rows.push_back({"Xi", "=", factor == Scalar(1) ? "C" : factor.to_string() + "*C"});

    auto& res = r.section("residual basis");
    for (std::size_t k = 0; k < h.residual_basis.size(); ++k) {
        // Charges C = Xi / factor, scaled so the leading entry is 1.
        const Vector& v = h.residual_basis[k].pair_values();
        std::optional<Scalar> lead;
        std::vector<std::string> parts;
        for (std::size_t p = 0; p < v.size(); ++p) {
            if (v[p].is_zero())
                continue;
            if (!lead)
                lead = v[p];
            parts.push_back("C(" + algebra.generator(pairs[p].first) + "," + algebra.generator(pairs[p].second) +
                            ") = " + (v[p] / *lead).to_string());
        }
        res.rows.push_back({"rep " + std::to_string(k + 1) + ":", join(parts, ", ")});
    }

    auto& rel = r.section("relations");
    for (const auto& e : exponent_relations(algebra))
        rel.rows.push_back({to_string(algebra, e)});

    auto& el = r.section("elimination");
    for (const auto& shift : h.elimination)
        el.rows.push_back({algebra.generator(shift.generator), "->", shift_expression(algebra, shift, factor)});
    return r;
}

Report rep_verify_report(const std::string& which) {
    if (which != "lorentz" && which != "sim2")
        throw InvalidArgument("rep-verify expects 'lorentz' or 'sim2', got '" + which + "'");
    Report r{"rep-verify", which, "pass", 0, {}, {}, {}};
    bool ok = true;
    auto row = [&](ReportSection& s, const std::string& name, bool got, bool expected) {
        s.rows.push_back({name, "=", pass_fail(got)});
        ok = ok && got == expected;
    };

    auto& cons = r.section("consistency");
    const bool lorentz = which == "lorentz";
    const IndexedRep rep = lorentz ? IndexedRep::lorentz() : IndexedRep::sim2();
    const StructureEvaluator f = lorentz ? StructureEvaluator::lorentz() : StructureEvaluator::sim2();
    const ConsistencyReport c = rep_consistency(rep, f);
    row(cons, "rep_consistency", c.passed, true);
    cons.rows.push_back({"mismatches", "=", std::to_string(c.mismatches.size())});

    auto& fac = r.section("tensors");
    row(fac, "factorization", factorization_check(), true);
    if (lorentz) {
        row(fac, "boost bracket with diag(-1,1,1,1)", boost_bracket_reproduced(Metric::standard()), true);
        fac.rows.push_back({"boost bracket with diag(1,-1,-1,-1)", "=",
                            boost_bracket_reproduced(Metric::mostly_minus()) ? "pass" : "mismatch"});
        ok = ok && !boost_bracket_reproduced(Metric::mostly_minus());
    } else {
        row(fac, "f(03) vanishes", sim2_target_vanishes({0, 3}), true);
        row(fac, "f(12) vanishes", sim2_target_vanishes({1, 2}), true);
        bool sigma_i0 = true;
        for (int i = 0; i < 4; ++i)
            sigma_i0 = sigma_i0 && sigma_target_vanishes({i, 0});
        row(fac, "Sigma(i0) vanishes", sigma_i0, true);
        row(fac, "Sigma(12) vanishes", sigma_target_vanishes({1, 2}), true);
    }

    auto& ids = r.section("identities");
    row(ids, "epsilon-delta", epsilon_delta_identity_check(), true);
    row(ids, "alpha-zeta", alphazeta_identity_check(), true);
    row(ids, "hat brackets 3d", hat_brackets_3d_check(), true);

    if (!ok) {
        r.verdict = "fail";
        r.exit_code = 1;
    }
    return r;
}

Report inhom_solve_report() {
    Report r{"inhom-solve", "", "pass", 0, {}, {}, {}};
    const InhomSolution sol = solve_inhomogeneous();

    auto& lin = r.section("linear block C_eta^rho");
    for (int e = 0; e < 4; ++e) {
        std::vector<std::string> row{"eta=" + std::to_string(e)};
        for (int rho = 0; rho < 4; ++rho)
            row.push_back(InhomSolution::c_linear(sol.particular, e, rho).to_string());
        lin.rows.push_back(std::move(row));
    }
    auto& cub = r.section("cubic block C_mn^rho_sigma");
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu)
            for (int rho = 0; rho < 4; ++rho)
                for (int sigma = 0; sigma < 4; ++sigma) {
                    const Scalar v = sol.c_cubic(mu, nu, rho, sigma);
                    if (!v.is_zero())
                        cub.rows.push_back({"C(" + std::to_string(mu) + std::to_string(nu) + ";" +
                                                std::to_string(rho) + "," + std::to_string(sigma) + ")",
                                            "=", v.to_string()});
                }

    const std::size_t proj = inhom_projection_rank(sol);
    auto& ns = r.section("nullspace");
    ns.rows.push_back({"dim", "=", std::to_string(sol.nullspace.size())});
    ns.rows.push_back({"linear projection rank", "=", std::to_string(proj)});
    ns.rows.push_back({"projection injective", "=", yes_no(proj == sol.nullspace.size())});

    const auto bad = inhom_round_trip(sol.particular);
    r.section("round trip").rows.push_back({"reproduced", "=", std::to_string(24 - bad.size()) + "/24"});
    if (!bad.empty() || sol.nullspace.empty() || proj != sol.nullspace.size()) {
        r.verdict = "fail";
        r.exit_code = 1;
    }
    return r;
}

Report catalog_report(const std::string& name) {
    Report r{"catalog", name, "value", 0, {}, {}, {}};
    r.body = emit_algebra(catalog(name));
    return r;
}

Report error_report(const std::string& verb, const std::string& source, const std::string& message) {
    Report r{verb, source, "error", 2, {}, {}, {}};
    r.section("error").rows.push_back({message});
    return r;
}

} // namespace lieq
