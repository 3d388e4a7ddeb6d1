#ifndef DUVAL_JETS_HPP
#define DUVAL_JETS_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lattice.hpp"
#include "newton.hpp"
#include "polynomial.hpp"

namespace duval {

/// x_i, y_i or z_i.
struct JetVariable {
    char base = 'x';
    unsigned level = 0;

    std::size_t axis() const { return static_cast<std::size_t>(base - 'x'); }
    std::string name() const { return std::string(1, base) + "_" + std::to_string(level); }

    friend auto operator<=>(const JetVariable&, const JetVariable&) = default;
};

enum class Center { origin, x_axis, y_axis, z_axis };

inline std::string to_string(Center c) {
    switch (c) {
    case Center::origin:
        return "origin";
    case Center::x_axis:
        return "x-axis";
    case Center::y_axis:
        return "y-axis";
    default:
        return "z-axis";
    }
}

/// The coordinate subspace V(S) of the jet space.
class ComponentSpec {
public:
    ComponentSpec(std::vector<JetVariable> vanishing, Center center) : vars_(std::move(vanishing)), center_(center) {
        std::sort(vars_.begin(), vars_.end());
        vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
        for (const auto& v : vars_) {
            if (v.base != 'x' && v.base != 'y' && v.base != 'z') {
                throw std::invalid_argument(std::string("unknown jet variable base ") + v.base);
            }
        }
        const auto has = [&](char b) { return contains({b, 0}); };
        if (center_ == Center::origin && !(has('x') && has('y') && has('z'))) {
            throw std::invalid_argument("an origin component must contain x_0, y_0 and z_0");
        }
        const char free_axis = center_ == Center::x_axis ? 'x' : center_ == Center::y_axis ? 'y' : 'z';
        if (center_ != Center::origin && has(free_axis)) {
            throw std::invalid_argument("a component centered on an axis must leave that axis coordinate free");
        }
    }

    /// V(S) with S = {x_0..x_{a1-1}, y_0..y_{a2-1}, z_0..z_{a3-1}}.
    static ComponentSpec prefix(const LatticeVector& a, Center center) {
        std::vector<JetVariable> vars;
        for (std::size_t j = 0; j < 3; ++j) {
            if (a[j] < 0) {
                throw std::invalid_argument("prefix lengths must be nonnegative");
            }
            for (Int i = 0; i < a[j]; ++i) {
                vars.push_back({static_cast<char>('x' + j), static_cast<unsigned>(i)});
            }
        }
        return ComponentSpec(std::move(vars), center);
    }

    const std::vector<JetVariable>& vanishing() const { return vars_; }
    Center centered_at() const { return center_; }
    std::size_t codimension() const { return vars_.size(); }

    bool contains(const JetVariable& v) const { return std::binary_search(vars_.begin(), vars_.end(), v); }

    unsigned max_level() const {
        unsigned m = 0;
        for (const auto& v : vars_) {
            m = std::max(m, v.level);
        }
        return m;
    }

    bool is_subset_of(const ComponentSpec& o) const {
        return std::includes(o.vars_.begin(), o.vars_.end(), vars_.begin(), vars_.end());
    }

    std::string to_string() const {
        std::string out = "V(";
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            out += (i ? "," : "") + vars_[i].name();
        }
        return out + ")";
    }

    friend bool operator==(const ComponentSpec&, const ComponentSpec&) = default;

private:
    std::vector<JetVariable> vars_;
    Center center_;
};

/// Jet coordinates x_0..x_m, y_0..y_m, z_0..z_m in that order.
inline std::vector<std::string> jet_variable_names(unsigned m) {
    std::vector<std::string> out;
    for (char b : {'x', 'y', 'z'}) {
        for (unsigned i = 0; i <= m; ++i) {
            out.push_back(JetVariable{b, i}.name());
        }
    }
    return out;
}

inline std::size_t jet_variable_index(const JetVariable& v, unsigned m) {
    return v.axis() * (m + 1) + v.level;
}

struct JetSystem {
    unsigned order = 0;
    std::vector<std::string> variables;
    /// F_0..F_m.
    std::vector<Polynomial> equations;
};

namespace detail {

using Series = std::vector<Polynomial>;

inline Series series_multiply(const Series& a, const Series& b, unsigned m, const std::vector<std::string>& vars) {
    Series out(m + 1, Polynomial(vars));
    for (unsigned i = 0; i <= m; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (unsigned j = 0; i + j <= m; ++j) {
            if (!b[j].is_zero()) {
                out[i + j] += a[i] * b[j];
            }
        }
    }
    return out;
}

} // namespace detail

/// Expands f(sum x_i t^i, sum y_i t^i, sum z_i t^i) modulo t^(m+1).
inline JetSystem jet_system(const Polynomial& f, unsigned m) {
    detail::require_three_variables(f);
    JetSystem js{m, jet_variable_names(m), {}};
    const auto& vars = js.variables;
    // powers[j][k] is the series of the j-th coordinate raised to k.
    std::array<std::vector<detail::Series>, 3> powers;
    std::array<std::uint32_t, 3> max_power{};
    for (const auto& [e, c] : f.terms()) {
        for (std::size_t j = 0; j < 3; ++j) {
            max_power[j] = std::max(max_power[j], e[j]);
        }
    }
    for (std::size_t j = 0; j < 3; ++j) {
        detail::Series one(m + 1, Polynomial(vars));
        one[0] = Polynomial::constant(vars, 1);
        detail::Series base(m + 1, Polynomial(vars));
        for (unsigned i = 0; i <= m; ++i) {
            base[i] = Polynomial::variable(vars, jet_variable_index({static_cast<char>('x' + j), i}, m));
        }
        powers[j].push_back(one);
        for (std::uint32_t k = 1; k <= max_power[j]; ++k) {
            powers[j].push_back(detail::series_multiply(powers[j].back(), base, m, vars));
        }
    }
    detail::Series total(m + 1, Polynomial(vars));
    for (const auto& [e, c] : f.terms()) {
        auto s = detail::series_multiply(powers[0][e[0]], powers[1][e[1]], m, vars);
        s = detail::series_multiply(s, powers[2][e[2]], m, vars);
        const auto coeff = Polynomial::constant(vars, c);
        for (unsigned i = 0; i <= m; ++i) {
            total[i] += coeff * s[i];
        }
    }
    js.equations = std::move(total);
    return js;
}

/// F_i with every variable of S set to zero. Variables of S above the
/// system's order do not occur and are ignored.
inline Polynomial restrict_equation(const JetSystem& js, const ComponentSpec& spec, unsigned i) {
    std::vector<bool> zero(js.variables.size(), false);
    for (const auto& v : spec.vanishing()) {
        if (v.level <= js.order) {
            zero[jet_variable_index(v, js.order)] = true;
        }
    }
    return js.equations.at(i).vanish(zero);
}

/// Whether F_0..F_m all vanish identically on V(S).
inline bool component_contained(const ComponentSpec& spec, const JetSystem& js, unsigned m) {
    if (m > js.order) {
        throw std::invalid_argument("jet system order is below the requested level");
    }
    for (unsigned i = 0; i <= m; ++i) {
        if (!restrict_equation(js, spec, i).is_zero()) {
            return false;
        }
    }
    return true;
}

inline bool component_contained(const ComponentSpec& spec, const Polynomial& f, unsigned m) {
    return component_contained(spec, jet_system(f, m), m);
}

/// Largest m <= order of js with V(S) contained in the m-th jet scheme, or -1.
inline int persistence_level(const ComponentSpec& spec, const JetSystem& js) {
    for (unsigned i = 0; i <= js.order; ++i) {
        if (!restrict_equation(js, spec, i).is_zero()) {
            return static_cast<int>(i) - 1;
        }
    }
    return static_cast<int>(js.order);
}

inline int persistence_level(const ComponentSpec& spec, const Polynomial& f, int cap) {
    if (cap < 0) {
        throw std::invalid_argument("cap must be nonnegative");
    }
    return persistence_level(spec, jet_system(f, static_cast<unsigned>(cap)));
}

/// Prefix lengths of S in each coordinate family.
inline LatticeVector weight_vector(const ComponentSpec& spec) {
    LatticeVector a;
    for (std::size_t j = 0; j < 3; ++j) {
        const char b = static_cast<char>('x' + j);
        Int count = 0;
        unsigned top = 0;
        for (const auto& v : spec.vanishing()) {
            if (v.base == b) {
                ++count;
                top = std::max(top, v.level);
            }
        }
        if (count > 0 && static_cast<Int>(top) + 1 != count) {
            throw std::invalid_argument("non-prefix component: " + spec.to_string());
        }
        a[j] = count;
    }
    return a;
}

/// Weight of each jet variable is its level; returns true when every F_i is
/// homogeneous of weight i.
inline bool weighted_homogeneous(const JetSystem& js) {
    for (unsigned i = 0; i <= js.order; ++i) {
        for (const auto& [e, c] : js.equations[i].terms()) {
            std::uint64_t w = 0;
            for (std::size_t k = 0; k < e.size(); ++k) {
                w += static_cast<std::uint64_t>(e[k]) * (k % (js.order + 1));
            }
            if (w != i) {
                return false;
            }
        }
    }
    return true;
}

} // namespace duval

#endif
