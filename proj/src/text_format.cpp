#include "lieq/text_format.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace lieq {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

// Lines with comments removed, paired with their 1-based number.
std::vector<std::pair<std::size_t, std::string>> content_lines(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::size_t line = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        ++line;
        std::string_view l = text.substr(pos, end - pos);
        if (auto hash = l.find('#'); hash != std::string_view::npos)
            l = l.substr(0, hash);
        l = trim(l);
        if (!l.empty())
            out.emplace_back(line, std::string(l));
        pos = end + 1;
    }
    return out;
}

bool valid_label(const std::string& s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.'))
            return false;
    return true;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path, 0, "", "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Scalar parse_scalar_at(const std::string& token, const std::string& source, std::size_t line) {
    try {
        return Scalar::parse(token);
    } catch (const ParseError& e) {
        throw ParseError(source, line, token, "bad scalar");
    } catch (const DivisionByZero&) {
        throw ParseError(source, line, token, "zero denominator");
    }
}

} // namespace

ParsedAlgebra parse_algebra(std::string_view text, const std::string& source) {
    const auto lines = content_lines(text);
    std::string name;
    std::vector<std::string> generators;
    std::map<std::string, std::size_t> index;
    bool have_generators = false;
    std::map<std::pair<std::size_t, std::size_t>, Vector> brackets;

    for (const auto& [ln, l] : lines) {
        const auto toks = split_ws(l);
        const std::string& head = toks.front();
        if (name.empty()) {
            if (head != "algebra")
                throw ParseError(source, ln, head, "expected 'algebra <name>' first");
            if (toks.size() != 2)
                throw ParseError(source, ln, toks.size() > 2 ? toks[2] : head, "algebra name must be one token");
            name = toks[1];
            continue;
        }
        if (head == "algebra")
            throw ParseError(source, ln, head, "duplicate 'algebra' line");
        if (head == "generators:" || head == "generators") {
            if (have_generators)
                throw ParseError(source, ln, head, "duplicate generators line");
            std::size_t first = 1;
            if (head == "generators") {
                if (toks.size() < 2 || toks[1] != ":")
                    throw ParseError(source, ln, head, "expected 'generators:'");
                first = 2;
            }
            if (toks.size() <= first)
                throw ParseError(source, ln, head, "empty generator list");
            for (std::size_t k = first; k < toks.size(); ++k) {
                if (!valid_label(toks[k]))
                    throw ParseError(source, ln, toks[k], "invalid generator label");
                if (!index.emplace(toks[k], generators.size()).second)
                    throw ParseError(source, ln, toks[k], "duplicate generator");
                generators.push_back(toks[k]);
            }
            have_generators = true;
            continue;
        }
        if (head != "bracket")
            throw ParseError(source, ln, head, "unknown directive");
        if (!have_generators)
            throw ParseError(source, ln, head, "bracket before generators line");
        if (toks.size() < 5 || toks[3] != "=")
            throw ParseError(source, ln, toks.size() > 3 ? toks[3] : head,
                             "expected 'bracket <ga> <gb> = <combination>'");
        auto lookup = [&](const std::string& g) {
            auto it = index.find(g);
            if (it == index.end())
                throw ParseError(source, ln, g, "unknown generator");
            return it->second;
        };
        std::size_t a = lookup(toks[1]);
        std::size_t b = lookup(toks[2]);
        if (a == b)
            throw ParseError(source, ln, toks[2], "diagonal bracket is always zero");

        Vector v(generators.size());
        if (!(toks.size() == 5 && toks[4] == "0")) {
            int sign = 1;
            bool expect_term = true;
            for (std::size_t k = 4; k < toks.size(); ++k) {
                const std::string& t = toks[k];
                if (!expect_term) {
                    if (t != "+" && t != "-")
                        throw ParseError(source, ln, t, "expected '+' or '-' between terms");
                    sign = t == "+" ? 1 : -1;
                    expect_term = true;
                    continue;
                }
                Scalar coeff(1);
                std::string gen = t;
                if (auto star = t.rfind('*'); star != std::string::npos) {
                    coeff = parse_scalar_at(t.substr(0, star), source, ln);
                    gen = t.substr(star + 1);
                } else if (!t.empty() && t.front() == '-') {
                    coeff = Scalar(-1);
                    gen = t.substr(1);
                }
                v[lookup(gen)] += Scalar(sign) * coeff;
                sign = 1;
                expect_term = false;
            }
            if (expect_term)
                throw ParseError(source, ln, toks.back(), "dangling operator");
        }
        if (a > b) {
            std::swap(a, b);
            v = Scalar(-1) * v;
        }
        if (!brackets.emplace(std::pair{a, b}, std::move(v)).second)
            throw ParseError(source, ln, toks[1] + " " + toks[2], "duplicate bracket line");
    }
    if (name.empty())
        throw ParseError(source, 0, "", "missing 'algebra <name>' line");
    if (!have_generators)
        throw ParseError(source, 0, "", "missing generators line");

    StructureTensor tensor(generators.size());
    for (auto& [key, v] : brackets)
        tensor.set(key.first, key.second, std::move(v));
    ParsedAlgebra out{verified(LieAlgebra(name, generators, std::move(tensor))), {}};
    if (!out.algebra.jacobi_verified()) {
        const auto report = check_jacobi(out.algebra);
        out.warnings.push_back(source + ": Jacobi identity fails on " +
                               std::to_string(report.violations.size()) + " triple(s)");
    }
    return out;
}

ParsedAlgebra load_algebra_file(const std::string& path) { return parse_algebra(read_file(path), path); }

std::string format_combination(const LieAlgebra& algebra, const Vector& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero())
            continue;
        Scalar c = v[k];
        std::string tok = c.to_string();
        const bool negative = !out.empty() && tok.front() == '-';
        if (negative)
            tok = (-c).to_string();
        if (!out.empty())
            out += negative ? " - " : " + ";
        out += (tok == "1" ? "" : tok + "*") + algebra.generator(k);
    }
    return out.empty() ? "0" : out;
}

std::string emit_algebra(const LieAlgebra& algebra) {
    std::string out = "algebra " + algebra.name() + "\ngenerators:";
    for (const auto& g : algebra.generators())
        out += " " + g;
    out += "\n";
    for (const auto& [key, value] : algebra.tensor().entries())
        out += "bracket " + algebra.generator(key.first) + " " + algebra.generator(key.second) + " = " +
               format_combination(algebra, value) + "\n";
    return out;
}

Matrix parse_matrix(std::string_view text, const std::string& source) {
    std::vector<Vector> rows;
    std::size_t width = 0;
    for (const auto& [ln, l] : content_lines(text)) {
        Vector row;
        for (const auto& tok : split_ws(l))
            row.push_back(parse_scalar_at(tok, source, ln));
        if (rows.empty())
            width = row.size();
        else if (row.size() != width)
            throw ParseError(source, ln, "", "row has " + std::to_string(row.size()) + " entries, expected " +
                                                 std::to_string(width));
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw ParseError(source, 0, "", "empty matrix");
    if (rows.size() != width)
        throw ParseError(source, 0, "", "matrix must be square");
    return Matrix::from_rows(rows, width);
}

Matrix load_matrix_file(const std::string& path) { return parse_matrix(read_file(path), path); }

} // namespace lieq
