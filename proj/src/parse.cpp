#include "mfk/parse.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace mfk {

namespace {

bool is_ident_start(char c) { return std::isalpha((unsigned char)c); }
bool is_ident_char(char c) { return std::isalnum((unsigned char)c) || c == '_'; }

// z<digits> with an index small enough for a ring.
bool is_z_name(const std::string& s, std::uint32_t* index) {
    if (s.size() < 2 || s[0] != 'z') return false;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit((unsigned char)s[i])) return false;
    if (s.size() > 3) return false; // indices above 999 are past any ring cap anyway
    *index = (std::uint32_t)std::stoul(s.substr(1));
    return true;
}

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1, col = 1;

    void skip_ws() {
        while (pos < text.size() && std::isspace((unsigned char)text[pos])) advance();
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() { return pos < text.size() ? text[pos] : '\0'; }
    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, line, col); }

    std::string ident() {
        std::string s;
        while (pos < text.size() && is_ident_char(text[pos])) {
            s += text[pos];
            advance();
        }
        return s;
    }
    mpz_class integer() {
        std::string digits;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
            digits += text[pos];
            advance();
        }
        if (digits.empty()) fail("expected a number");
        return mpz_class(digits);
    }
};

} // namespace

VarTable VarTable::defaults(std::uint32_t num_vars) {
    std::vector<std::string> names;
    names.reserve(num_vars);
    for (std::uint32_t i = 0; i < num_vars; ++i) names.push_back("z" + std::to_string(i));
    return from_names(std::move(names));
}

VarTable VarTable::from_names(std::vector<std::string> names) {
    if (names.size() > kMaxVars)
        throw budget_error("ring has " + std::to_string(names.size()) + " variables; the cap is " +
                           std::to_string(kMaxVars));
    VarTable t;
    for (std::uint32_t i = 0; i < names.size(); ++i) {
        if (names[i].empty() || !is_ident_start(names[i][0]))
            throw domain_error("bad variable name '" + names[i] + "'");
        for (char c : names[i])
            if (!is_ident_char(c)) throw domain_error("bad variable name '" + names[i] + "'");
        if (!t.index_.emplace(names[i], i).second)
            throw domain_error("duplicate variable name '" + names[i] + "'");
    }
    t.names_ = std::move(names);
    return t;
}

bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (std::isdigit((unsigned char)a[i]) && std::isdigit((unsigned char)b[j])) {
            std::size_t i2 = i, j2 = j;
            while (i2 < a.size() && std::isdigit((unsigned char)a[i2])) ++i2;
            while (j2 < b.size() && std::isdigit((unsigned char)b[j2])) ++j2;
            unsigned long na = std::stoul(a.substr(i, i2 - i));
            unsigned long nb = std::stoul(b.substr(j, j2 - j));
            if (na != nb) return na < nb;
            i = i2;
            j = j2;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return a.size() - i < b.size() - j;
}

VarTable VarTable::inferred(const std::vector<std::string>& texts) {
    std::set<std::string> seen;
    for (const std::string& t : texts)
        for (std::string& n : collect_variable_names(t)) seen.insert(std::move(n));

    bool all_z = true;
    std::uint32_t max_index = 0;
    for (const std::string& n : seen) {
        std::uint32_t idx;
        if (!is_z_name(n, &idx)) {
            all_z = false;
            break;
        }
        max_index = std::max(max_index, idx);
    }
    if (all_z) return defaults(seen.empty() ? 0 : max_index + 1);

    std::vector<std::string> names(seen.begin(), seen.end());
    std::sort(names.begin(), names.end(), natural_less);
    return from_names(std::move(names));
}

std::uint32_t VarTable::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw domain_error("unknown variable '" + name + "'");
    return it->second;
}

bool VarTable::is_default() const {
    for (std::uint32_t i = 0; i < names_.size(); ++i)
        if (names_[i] != "z" + std::to_string(i)) return false;
    return true;
}

std::vector<std::string> collect_variable_names(const std::string& text) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    Cursor c{text};
    while (!c.done()) {
        if (is_ident_start(c.peek())) {
            std::string n = c.ident();
            if (seen.insert(n).second) out.push_back(std::move(n));
        } else {
            c.advance();
        }
    }
    return out;
}

Polynomial parse_polynomial(const std::string& text, Field k, const VarTable& vars) {
    Cursor c{text};
    std::vector<Term> terms;
    const std::uint32_t n = vars.size();

    if (c.done()) c.fail("empty polynomial text");

    bool first = true;
    while (!c.done()) {
        // sign
        bool negative = false;
        if (c.peek() == '+' || c.peek() == '-') {
            negative = c.peek() == '-';
            c.advance();
            if (c.done()) c.fail("dangling sign");
        } else if (!first) {
            c.fail("expected + or - between terms");
        }
        first = false;
        c.skip_ws();

        int term_line = c.line, term_col = c.col;
        Scalar coef = Scalar::one(k);
        bool have_coef = false;
        if (std::isdigit((unsigned char)c.peek())) {
            mpz_class num = c.integer();
            mpz_class den = 1;
            c.skip_ws();
            if (c.peek() == '/') {
                c.advance();
                c.skip_ws();
                if (!std::isdigit((unsigned char)c.peek())) c.fail("expected a denominator");
                den = c.integer();
                if (den == 0) c.fail("zero denominator");
            }
            try {
                coef = Scalar::fraction(k, num, den);
            } catch (const domain_error& e) {
                throw parse_error(e.what(), term_line, term_col);
            }
            have_coef = true;
            c.skip_ws();
            if (c.peek() == '*') {
                c.advance();
                c.skip_ws();
                if (!is_ident_start(c.peek())) c.fail("expected a variable after *");
            }
        }

        Monomial mono(n);
        bool have_var = false;
        while (!c.done() && is_ident_start(c.peek())) {
            int var_line = c.line, var_col = c.col;
            std::string name = c.ident();
            std::uint32_t idx;
            try {
                idx = vars.index_of(name);
            } catch (const domain_error& e) {
                throw parse_error(e.what(), var_line, var_col);
            }
            unsigned long exp = 1;
            c.skip_ws();
            if (c.peek() == '^') {
                c.advance();
                c.skip_ws();
                if (!std::isdigit((unsigned char)c.peek())) c.fail("expected an exponent");
                mpz_class e = c.integer();
                if (e > kMaxExponent)
                    throw parse_error("exponent exceeds the cap of " + std::to_string(kMaxExponent),
                                      var_line, var_col);
                exp = e.get_ui();
            }
            unsigned long total = mono.exponent(idx) + exp;
            if (total > kMaxExponent)
                throw parse_error("exponent exceeds the cap of " + std::to_string(kMaxExponent),
                                  var_line, var_col);
            mono.set_exponent(idx, (std::uint32_t)total);
            have_var = true;
            c.skip_ws();
            if (c.peek() == '*') {
                c.advance();
                c.skip_ws();
                if (!is_ident_start(c.peek())) c.fail("expected a variable after *");
            } else {
                break;
            }
        }

        if (!have_coef && !have_var) c.fail("expected a term");
        if (negative) coef = -coef;
        terms.push_back({mono, coef});
        c.skip_ws();
    }

    return Polynomial::from_terms(k, n, std::move(terms));
}

ParsedPolynomial parse_polynomial(const std::string& text, Field k) {
    VarTable vars = VarTable::inferred({text});
    Polynomial p = parse_polynomial(text, k, vars);
    return {std::move(p), std::move(vars)};
}

} // namespace mfk
