#ifndef DUVAL_POLYNOMIAL_HPP
#define DUVAL_POLYNOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace duval {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

inline std::vector<std::string> xyz_variables() { return {"x", "y", "z"}; }

/// Sparse multivariate polynomial with integer coefficients over an ordered
/// list of named variables.
class Polynomial {
public:
    using Exponent = std::vector<std::uint32_t>;
    using Terms = std::map<Exponent, BigInt>;

    Polynomial() : Polynomial(xyz_variables()) {}
    explicit Polynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {}

    static Polynomial constant(std::vector<std::string> variables, const BigInt& c) {
        Polynomial p(std::move(variables));
        p.add_term(Exponent(p.vars_.size(), 0), c);
        return p;
    }

    static Polynomial monomial(std::vector<std::string> variables, Exponent e, const BigInt& c = 1) {
        Polynomial p(std::move(variables));
        if (e.size() != p.vars_.size()) {
            throw std::invalid_argument("exponent length does not match the variable count");
        }
        p.add_term(std::move(e), c);
        return p;
    }

    static Polynomial variable(std::vector<std::string> variables, std::size_t index) {
        Exponent e(variables.size(), 0);
        e.at(index) = 1;
        return monomial(std::move(variables), std::move(e));
    }

    const std::vector<std::string>& variables() const { return vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    std::size_t variable_index(std::string_view name) const {
        const auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) {
            throw std::invalid_argument("unknown variable " + std::string(name));
        }
        return static_cast<std::size_t>(it - vars_.begin());
    }

    BigInt coefficient(const Exponent& e) const {
        const auto it = terms_.find(e);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    void add_term(Exponent e, const BigInt& c) {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        require_same_ring(o);
        for (const auto& [e, c] : o.terms_) {
            add_term(e, c);
        }
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        require_same_ring(o);
        for (const auto& [e, c] : o.terms_) {
            add_term(e, -c);
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator-(Polynomial a) {
        for (auto& [e, c] : a.terms_) {
            c = -c;
        }
        return a;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_same_ring(b);
        Polynomial out(a.vars_);
        Exponent e(a.vars_.size());
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) {
                    e[i] = ea[i] + eb[i];
                }
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial pow(unsigned k) const {
        Polynomial out = constant(vars_, 1);
        Polynomial base = *this;
        while (k > 0) {
            if (k & 1U) {
                out *= base;
            }
            k >>= 1U;
            if (k > 0) {
                base *= base;
            }
        }
        return out;
    }

    Polynomial derivative(std::size_t index) const {
        Polynomial out(vars_);
        for (const auto& [e, c] : terms_) {
            if (e.at(index) == 0) {
                continue;
            }
            Exponent d = e;
            --d[index];
            out.add_term(std::move(d), c * e[index]);
        }
        return out;
    }

    /// Sets every variable whose index is flagged to zero.
    Polynomial vanish(const std::vector<bool>& zero) const {
        Polynomial out(vars_);
        for (const auto& [e, c] : terms_) {
            bool survives = true;
            for (std::size_t i = 0; i < e.size() && survives; ++i) {
                survives = !(zero[i] && e[i] > 0);
            }
            if (survives) {
                out.terms_.emplace(e, c);
            }
        }
        return out;
    }

    /// Value at a point of F_p^n, in [0, p).
    Int evaluate_mod(std::span<const Int> point, Int p) const {
        if (point.size() != vars_.size()) {
            throw std::invalid_argument("point dimension does not match the variable count");
        }
        const BigInt P = p;
        BigInt acc = 0;
        for (const auto& [e, c] : terms_) {
            BigInt term = c % P;
            for (std::size_t i = 0; i < e.size() && term != 0; ++i) {
                if (e[i] > 0) {
                    term = term * BigInt(boost::multiprecision::powm(BigInt(point[i]), BigInt(e[i]), P)) % P;
                }
            }
            acc = (acc + term) % P;
        }
        if (acc < 0) {
            acc += P;
        }
        return static_cast<Int>(acc);
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    /// Terms in printing order: ascending total degree, then lexicographically
    /// descending exponents (so x^2 comes before x*y before y^2).
    std::vector<std::pair<Exponent, BigInt>> ordered_terms() const {
        std::vector<std::pair<Exponent, BigInt>> out(terms_.begin(), terms_.end());
        std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            const auto da = total_degree(a.first);
            const auto db = total_degree(b.first);
            if (da != db) {
                return da < db;
            }
            return a.first > b.first;
        });
        return out;
    }

    static std::uint64_t total_degree(const Exponent& e) {
        std::uint64_t d = 0;
        for (auto k : e) {
            d += k;
        }
        return d;
    }

    std::string to_string() const {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        bool first = true;
        for (const auto& [e, c] : ordered_terms()) {
            const bool negative = c < 0;
            const BigInt magnitude = negative ? BigInt(-c) : c;
            if (first) {
                out += negative ? "-" : "";
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;
            std::string factors;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) {
                    continue;
                }
                if (!factors.empty()) {
                    factors += "*";
                }
                factors += vars_[i];
                if (e[i] > 1) {
                    factors += "^" + std::to_string(e[i]);
                }
            }
            if (factors.empty()) {
                out += magnitude.str();
            } else if (magnitude == 1) {
                out += factors;
            } else {
                out += magnitude.str() + "*" + factors;
            }
        }
        return out;
    }

private:
    void require_same_ring(const Polynomial& o) const {
        if (vars_ != o.vars_) {
            throw std::invalid_argument("polynomials live over different variable lists");
        }
    }

    std::vector<std::string> vars_;
    Terms terms_;
};

inline Int power_mod(Int base, std::uint64_t e, Int p) {
    Int result = 1 % p;
    base %= p;
    if (base < 0) {
        base += p;
    }
    while (e > 0) {
        if (e & 1U) {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1U;
    }
    return result;
}

/// A polynomial with coefficients reduced modulo a small prime, for
/// exhaustive point scans.
class ModularPolynomial {
public:
    ModularPolynomial(const Polynomial& f, Int p) : p_(p) {
        if (p < 2 || p >= (Int{1} << 31)) {
            throw std::invalid_argument("modulus out of range: " + std::to_string(p));
        }
        const BigInt P = p;
        for (const auto& [e, c] : f.terms()) {
            BigInt r = c % P;
            if (r < 0) {
                r += P;
            }
            if (r != 0) {
                terms_.emplace_back(e, static_cast<Int>(r));
            }
        }
    }

    Int modulus() const { return p_; }
    bool is_zero() const { return terms_.empty(); }

    Int operator()(std::span<const Int> point) const {
        Int acc = 0;
        for (const auto& [e, c] : terms_) {
            Int term = c;
            for (std::size_t i = 0; i < e.size() && term != 0; ++i) {
                if (e[i] > 0) {
                    term = term * power_mod(point[i], e[i], p_) % p_;
                }
            }
            acc = (acc + term) % p_;
        }
        return acc;
    }

private:
    Int p_;
    std::vector<std::pair<Polynomial::Exponent, Int>> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

namespace detail {

class PolynomialParser {
public:
    PolynomialParser(std::string_view text, std::vector<std::string> vars)
        : text_(text), vars_(std::move(vars)) {}

    Polynomial parse() {
        Polynomial out(vars_);
        skip_space();
        if (at_end()) {
            throw ParseError("empty polynomial", pos_);
        }
        bool first = true;
        while (true) {
            skip_space();
            if (at_end()) {
                break;
            }
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            first = false;
            parse_term(out, sign);
        }
        return out;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }

    BigInt parse_integer() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    // Longest variable name matching at the cursor.
    std::optional<std::size_t> match_variable() const {
        std::optional<std::size_t> best;
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            const auto& v = vars_[i];
            if (v.size() > best_len && text_.substr(pos_, v.size()) == v) {
                best = i;
                best_len = v.size();
            }
        }
        return best;
    }

    void parse_term(Polynomial& out, int sign) {
        const std::size_t term_start = pos_;
        BigInt coeff = 1;
        bool has_coeff = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_integer();
            has_coeff = true;
            skip_space();
        }
        Polynomial::Exponent e(vars_.size(), 0);
        bool has_factor = false;
        while (true) {
            skip_space();
            if (at_end()) {
                break;
            }
            if (peek() == '*') {
                if (!has_coeff && !has_factor) {
                    throw ParseError("unexpected '*'", pos_);
                }
                ++pos_;
                skip_space();
                if (at_end() || !std::isalpha(static_cast<unsigned char>(peek()))) {
                    throw ParseError("expected a variable after '*'", pos_);
                }
            }
            if (!std::isalpha(static_cast<unsigned char>(peek()))) {
                break;
            }
            const auto idx = match_variable();
            if (!idx) {
                std::size_t end = pos_;
                while (end < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
                    ++end;
                }
                throw ParseError("unknown variable '" + std::string(text_.substr(pos_, end - pos_)) + "'", pos_);
            }
            pos_ += vars_[*idx].size();
            skip_space();
            std::uint32_t power = 1;
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_space();
                if (!at_end() && peek() == '-') {
                    throw ParseError("negative exponent", pos_);
                }
                if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
                    throw ParseError("expected an exponent after '^'", pos_);
                }
                const std::size_t exp_pos = pos_;
                const BigInt k = parse_integer();
                if (k == 0 || k > 1000000) {
                    throw ParseError("exponent must be a positive integer", exp_pos);
                }
                power = static_cast<std::uint32_t>(k);
            }
            e[*idx] += power;
            has_factor = true;
        }
        if (!has_coeff && !has_factor) {
            throw ParseError("expected a term", term_start);
        }
        out.add_term(std::move(e), sign * coeff);
    }

    std::string_view text_;
    std::vector<std::string> vars_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses text such as "x*y - z^3" or "2xy + z^2" over the given variables.
inline Polynomial parse_polynomial(std::string_view text, std::vector<std::string> variables = xyz_variables()) {
    return detail::PolynomialParser(text, std::move(variables)).parse();
}

} // namespace duval

#endif
