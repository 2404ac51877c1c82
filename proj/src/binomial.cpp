#include "sgtoric/binomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sgtoric {

Monomial mono_one(int m) { return Monomial(m + 1, 0); }

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > (i < b.size() ? b[i] : 0)) return false;
    return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
    if (!mono_divides(a, b)) throw std::invalid_argument("mono_div: not divisible");
    Monomial r = b;
    for (size_t i = 0; i < a.size(); ++i) r[i] -= a[i];
    return r;
}

int64_t mono_degree(const Monomial& a) {
    int64_t d = 0;
    for (auto x : a) d += x;
    return d;
}

bool mono_is_one(const Monomial& a) {
    return std::all_of(a.begin(), a.end(), [](int64_t x) { return x == 0; });
}

std::string mono_str(const Monomial& a) {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 1; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (any) os << '*';
        os << 'e' << i;
        if (a[i] > 1) os << '^' << a[i];
        any = true;
    }
    if (!any) os << '1';
    return os.str();
}

bool Binomial::coprime() const {
    for (size_t i = 0; i < plus.size(); ++i)
        if (plus[i] > 0 && minus[i] > 0) return false;
    return true;
}

Binomial Binomial::reduced() const {
    Binomial r = *this;
    for (size_t i = 0; i < r.plus.size(); ++i) {
        int64_t c = std::min(r.plus[i], r.minus[i]);
        r.plus[i] -= c;
        r.minus[i] -= c;
    }
    return r;
}

Binomial Binomial::sign_normalized() const {
    Binomial r = *this;
    if (r.minus > r.plus) std::swap(r.plus, r.minus);
    return r;
}

bool Binomial::same_up_to_sign(const Binomial& o) const {
    return (plus == o.plus && minus == o.minus) || (plus == o.minus && minus == o.plus);
}

std::string Binomial::str() const {
    return mono_str(plus) + " - " + mono_str(minus);
}

Binomial binomial_from_sides(Monomial plus, Monomial minus, std::string provenance) {
    if (plus.size() != minus.size()) throw std::invalid_argument("binomial sides disagree on variable count");
    Binomial b;
    b.plus = std::move(plus);
    b.minus = std::move(minus);
    b.provenance = std::move(provenance);
    return b;
}

}  // namespace sgtoric
