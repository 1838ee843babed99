#pragma once

#include <string>
#include <variant>

#include "ifsdyn/errors.hpp"
#include "ifsdyn/rational.hpp"

namespace ifsdyn {

// x |-> a*x + b
struct Affine {
    Rational a;
    Rational b;
};

// x |-> (a*x + b) / (c*x + d)
struct Moebius {
    Rational a;
    Rational b;
    Rational c;
    Rational d;
};

// An increasing contraction of [0,1] into itself, stored exactly. Both
// families are closed under exact rational evaluation and inversion, so
// orbits of the associated expanding dynamics never leave the rationals.
class MonotoneMap {
public:
    MonotoneMap(Affine f) : rep_(f) {}
    MonotoneMap(Moebius f) : rep_(f) {}

    static MonotoneMap affine(Rational a, Rational b) {
        return MonotoneMap(Affine{std::move(a), std::move(b)});
    }
    static MonotoneMap moebius(Rational a, Rational b, Rational c, Rational d) {
        return MonotoneMap(Moebius{std::move(a), std::move(b), std::move(c), std::move(d)});
    }

    bool is_affine() const { return std::holds_alternative<Affine>(rep_); }
    const Affine& as_affine() const { return std::get<Affine>(rep_); }
    const Moebius& as_moebius() const { return std::get<Moebius>(rep_); }

    friend bool operator==(const MonotoneMap& lhs, const MonotoneMap& rhs) {
        if (lhs.is_affine() != rhs.is_affine()) return false;
        if (lhs.is_affine()) {
            const auto &l = lhs.as_affine(), &r = rhs.as_affine();
            return l.a == r.a && l.b == r.b;
        }
        const auto &l = lhs.as_moebius(), &r = rhs.as_moebius();
        return l.a == r.a && l.b == r.b && l.c == r.c && l.d == r.d;
    }

    std::string describe() const {
        if (is_affine()) {
            const auto& f = as_affine();
            return "affine(a=" + to_string(f.a) + ", b=" + to_string(f.b) + ")";
        }
        const auto& f = as_moebius();
        return "moebius(a=" + to_string(f.a) + ", b=" + to_string(f.b) + ", c=" + to_string(f.c) +
               ", d=" + to_string(f.d) + ")";
    }

private:
    std::variant<Affine, Moebius> rep_;
};

namespace detail {

// cx+d must be nonzero with constant sign on [0,1]; returns denominator at the
// two endpoints after normalizing the sign to positive.
inline std::pair<Rational, Rational> moebius_denominators(const Moebius& f) {
    const Rational at0 = f.d;
    const Rational at1 = f.c + f.d;
    if (at0 == 0 || at1 == 0 || (at0 > 0) != (at1 > 0))
        throw SingularError("moebius denominator vanishes on [0,1]: " + to_string(f.c) + "*x+" +
                            to_string(f.d));
    if (at0 > 0) return {at0, at1};
    return {-at0, -at1};
}

}  // namespace detail

inline Rational evaluate(const MonotoneMap& map, const Rational& x) {
    if (!in_unit_interval(x)) throw DomainError("evaluate: x = " + to_string(x) + " outside [0,1]");
    if (map.is_affine()) {
        const auto& f = map.as_affine();
        return f.a * x + f.b;
    }
    const auto& f = map.as_moebius();
    detail::moebius_denominators(f);
    return (f.a * x + f.b) / (f.c * x + f.d);
}

// Unique x in [0,1] with f(x)=y, exact.
inline Rational invert(const MonotoneMap& map, const Rational& y) {
    const Rational lo = evaluate(map, Rational(0));
    const Rational hi = evaluate(map, Rational(1));
    if (y < lo || y > hi)
        throw RangeError("invert: y = " + to_string(y) + " outside [" + to_string(lo) + ", " +
                         to_string(hi) + "]");
    if (map.is_affine()) {
        const auto& f = map.as_affine();
        return (y - f.b) / f.a;
    }
    const auto& f = map.as_moebius();
    return (f.d * y - f.b) / (f.a - f.c * y);
}

// sup over [0,1] of the derivative. Affine: a. Moebius: the derivative
// (ad-bc)/(cx+d)^2 is monotone on any pole-free interval, so the sup sits at
// the endpoint minimizing |cx+d|.
inline Rational contraction_factor(const MonotoneMap& map) {
    if (map.is_affine()) return map.as_affine().a;
    const auto& f = map.as_moebius();
    const auto [d0, d1] = detail::moebius_denominators(f);
    const Rational det = f.a * f.d - f.b * f.c;
    const Rational dmin = d0 < d1 ? d0 : d1;
    return det / (dmin * dmin);
}

}  // namespace ifsdyn
