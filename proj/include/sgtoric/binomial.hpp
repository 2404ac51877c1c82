#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sgtoric {

/// Exponent vector over edge variables e_1..e_m; index 0 unused.
using Monomial = std::vector<int64_t>;

Monomial mono_one(int m);
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a, exact
int64_t mono_degree(const Monomial& a);
bool mono_is_one(const Monomial& a);
std::string mono_str(const Monomial& a);

/// Pair of exponent mappings (B+, B-). The zero binomial has plus == minus.
struct Binomial {
    Monomial plus, minus;
    std::string provenance;  // walk or kernel-vector note, free-form

    int vars() const { return static_cast<int>(plus.size()) - 1; }
    bool is_zero() const { return plus == minus; }
    /// Sides share no variable.
    bool coprime() const;
    /// Divide out the common monomial factor.
    Binomial reduced() const;
    /// Orientation-free canonical representative (fixes the global sign).
    Binomial sign_normalized() const;

    bool operator==(const Binomial& o) const { return plus == o.plus && minus == o.minus; }
    bool same_up_to_sign(const Binomial& o) const;

    std::string str() const;
};

Binomial binomial_from_sides(Monomial plus, Monomial minus, std::string provenance = {});

}  // namespace sgtoric
