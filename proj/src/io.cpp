#include "ginlex/io.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace ginlex {

namespace {

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

struct LineScanner {
    const std::string& s;
    int line;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size() || s[pos] == '#';
    }
    int col() const { return static_cast<int>(pos) + 1; }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) { throw ParseError(line, col(), what); }

    long long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return std::stoll(s.substr(start, pos - start));
    }
    std::string name() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                  s[pos] == '_' || s[pos] == '\''))
            ++pos;
        if (pos == start) fail("expected a variable name");
        return s.substr(start, pos - start);
    }
};

Polynomial parse_generator(LineScanner& sc, const std::map<std::string, int>& var_of, int n) {
    std::vector<Term> terms;
    bool first = true;
    while (!sc.done()) {
        Rat sign = 1;
        char c = sc.peek();
        if (c == '+' || c == '-') {
            sign = (c == '-') ? -1 : 1;
            ++sc.pos;
        } else if (!first) {
            sc.fail("expected '+' or '-' between terms");
        }
        first = false;

        Rat coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
            long long p = sc.integer();
            long long q = 1;
            if (sc.peek() == '/') {
                ++sc.pos;
                q = sc.integer();
                if (q == 0) sc.fail("zero denominator");
            }
            coeff = Rat(p, q);
            have_coeff = true;
            if (sc.peek() == '*') ++sc.pos;
        }
        std::vector<int> exps(static_cast<size_t>(n), 0);
        bool have_var = false;
        for (;;) {
            char nx = sc.peek();
            if (!std::isalpha(static_cast<unsigned char>(nx)) && nx != '_') break;
            int col = sc.col();
            std::string nm = sc.name();
            auto it = var_of.find(nm);
            if (it == var_of.end()) throw ParseError(sc.line, col, "unknown variable " + nm);
            long long e = 1;
            if (sc.peek() == '^') {
                ++sc.pos;
                e = sc.integer();
                if (e < 0) sc.fail("negative exponent");
            }
            exps[static_cast<size_t>(it->second)] += static_cast<int>(e);
            have_var = true;
            if (sc.peek() == '*') {
                ++sc.pos;
                continue;
            }
            break;
        }
        if (!have_var && !have_coeff) sc.fail("expected a term");
        terms.push_back({sign * coeff, Monomial(std::move(exps))});
    }
    if (terms.empty()) sc.fail("empty generator");
    return Polynomial(std::move(terms));
}

}  // namespace

ParsedIdeal parse_ideal(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    ParsedIdeal out;
    bool have_header = false;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        LineScanner sc{raw, line_no};
        if (sc.done()) continue;
        if (!have_header) {
            std::string kw = sc.name();
            if (kw != "vars" || sc.peek() != ':')
                throw ParseError(line_no, 1, "expected header 'vars: x1 x2 ...'");
            ++sc.pos;
            while (!sc.done()) out.var_names.push_back(sc.name());
            if (out.var_names.empty()) sc.fail("no variables declared");
            out.n = static_cast<int>(out.var_names.size());
            have_header = true;
            continue;
        }
        std::map<std::string, int> var_of;
        for (size_t i = 0; i < out.var_names.size(); ++i)
            var_of[out.var_names[i]] = static_cast<int>(i);
        Polynomial g = parse_generator(sc, var_of, out.n);
        if (!g.homogeneous_degree()) {
            std::string degs;
            for (auto& t : g.terms()) degs += (degs.empty() ? "" : ", ") +
                                               std::to_string(t.mono.degree());
            throw ParseError(line_no, 1, "inhomogeneous generator with term degrees " + degs);
        }
        out.gens.push_back(std::move(g));
    }
    if (!have_header) throw ParseError(line_no, 1, "missing 'vars:' header");
    return out;
}

std::string print_polynomial(const Polynomial& p, const std::vector<std::string>& var_names) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& t : p.terms()) {
        Rat c = t.coeff;
        if (first) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        first = false;
        std::string mono;
        for (int i = 1; i <= t.mono.nvars(); ++i) {
            int e = t.mono.exp(i);
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_names[static_cast<size_t>(i - 1)];
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += rat_str(c);
        } else if (c == 1) {
            out += mono;
        } else {
            out += rat_str(c) + "*" + mono;
        }
    }
    return out;
}

std::string print_ideal(const std::vector<Polynomial>& gens, int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    std::string out = "vars:";
    for (auto& nm : names) out += " " + nm;
    out += "\n";
    for (auto& g : gens) out += print_polynomial(g, names) + "\n";
    return out;
}

std::string render_diagram(const BettiTable& bt, int n) {
    int kmin = 0, kmax = -1;
    for (auto& [key, v] : bt.entries) {
        auto [i, j] = key;
        if (i < 1 || v == 0) continue;
        int k = j - i;
        if (kmax < kmin) kmin = kmax = k;
        kmin = std::min(kmin, k);
        kmax = std::max(kmax, k);
    }
    std::string out;
    for (int k = kmin; k <= kmax; ++k) {
        out += "row j-i=" + std::to_string(k) + ":";
        for (int i = 1; i <= n; ++i) out += " " + std::to_string(bt.get(i, i + k));
        out += "\n";
    }
    return out;
}

std::string ResultRecord::str() const {
    std::string out;
    for (auto& [k, v] : fields) out += k + ": " + v + "\n";
    return out;
}

}  // namespace ginlex
