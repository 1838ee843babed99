#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ifsdyn/errors.hpp"
#include "ifsdyn/monotone_map.hpp"
#include "ifsdyn/rational.hpp"
#include "ifsdyn/real.hpp"

namespace ifsdyn {

// Two increasing contractions whose images cover [0,1] and overlap in an
// interval of positive length. Plain aggregate: axioms are checked by
// validate(), not the constructor, so invalid candidates can be reported on.
struct OverlappingIFS {
    MonotoneMap f0;
    MonotoneMap f1;
};

enum class MaskVariant { Plus, Minus };

inline std::string to_string(MaskVariant v) {
    return v == MaskVariant::Plus ? "plus" : "minus";
}

struct AxiomCheck {
    std::string axiom;
    bool pass;
    std::string detail;
};

struct ValidationReport {
    std::vector<AxiomCheck> checks;
    // Both maps affine with equal slope: the similitude class for which the
    // entropy formula is unconditionally valid.
    bool equal_ratio = false;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    std::string summary() const {
        std::string out;
        for (const auto& c : checks) {
            out += (c.pass ? "PASS " : "FAIL ") + c.axiom;
            if (!c.detail.empty()) out += ": " + c.detail;
            out += "\n";
        }
        out += std::string("equal_ratio: ") + (equal_ratio ? "true" : "false") + "\n";
        return out;
    }
};

namespace detail {

inline void check_map(const MonotoneMap& f, const std::string& name,
                      std::vector<AxiomCheck>& checks) {
    // increasing
    try {
        bool increasing;
        std::string detail;
        if (f.is_affine()) {
            increasing = f.as_affine().a > 0;
            detail = "slope " + to_string(f.as_affine().a);
        } else {
            const auto& m = f.as_moebius();
            moebius_denominators(m);  // throws if pole inside [0,1]
            const Rational det = m.a * m.d - m.b * m.c;
            increasing = det > 0;
            detail = "determinant " + to_string(det);
        }
        checks.push_back({name + " increasing", increasing, detail});
    } catch (const SingularError& e) {
        checks.push_back({name + " increasing", false, e.what()});
        return;
    }

    const Rational lo = evaluate(f, Rational(0));
    const Rational hi = evaluate(f, Rational(1));
    checks.push_back({name + " maps [0,1] into [0,1]", lo >= 0 && hi <= 1,
                      name + "(0)=" + to_string(lo) + ", " + name + "(1)=" + to_string(hi)});

    const Rational c = contraction_factor(f);
    checks.push_back({name + " strict contraction", c < 1, "factor " + to_string(c)});
}

}  // namespace detail

inline ValidationReport validate(const OverlappingIFS& ifs) {
    ValidationReport report;
    detail::check_map(ifs.f0, "f0", report.checks);
    detail::check_map(ifs.f1, "f1", report.checks);

    try {
        const Rational f00 = evaluate(ifs.f0, Rational(0));
        const Rational f11 = evaluate(ifs.f1, Rational(1));
        report.checks.push_back(
            {"f0(0) = 0", f00 == 0, "f0(0)=" + to_string(f00)});
        report.checks.push_back(
            {"f1(1) = 1", f11 == 1, "f1(1)=" + to_string(f11)});

        const Rational f10 = evaluate(ifs.f1, Rational(0));
        const Rational f01 = evaluate(ifs.f0, Rational(1));
        const bool overlap = 0 < f10 && f10 < f01 && f01 < 1;
        report.checks.push_back({"strict overlap 0 < f1(0) < f0(1) < 1", overlap,
                                 "f1(0)=" + to_string(f10) + ", f0(1)=" + to_string(f01)});
    } catch (const Error& e) {
        report.checks.push_back({"endpoint evaluation", false, e.what()});
    }

    report.equal_ratio = ifs.f0.is_affine() && ifs.f1.is_affine() &&
                         ifs.f0.as_affine().a == ifs.f1.as_affine().a;
    return report;
}

inline Rational overlap_lower(const OverlappingIFS& ifs) {
    return evaluate(ifs.f1, Rational(0));
}
inline Rational overlap_upper(const OverlappingIFS& ifs) {
    return evaluate(ifs.f0, Rational(1));
}

inline Rational max_contraction(const OverlappingIFS& ifs) {
    const Rational c0 = contraction_factor(ifs.f0);
    const Rational c1 = contraction_factor(ifs.f1);
    return c0 > c1 ? c0 : c1;
}

// An overlapping IFS with a mask point and mask variant; equivalently one of
// the expanding dynamical systems T_q^+/T_q^- on [0,1].
struct MaskedSystem {
    OverlappingIFS ifs;
    Rational q;
    MaskVariant variant;

    MaskedSystem(OverlappingIFS system, Rational mask_point, MaskVariant v)
        : ifs(std::move(system)), q(std::move(mask_point)), variant(v) {
        const Rational lo = overlap_lower(ifs);
        const Rational hi = overlap_upper(ifs);
        if (!(lo < q && q < hi))
            throw MaskRangeError("mask point " + to_string(q) + " outside overlap (" +
                                 to_string(lo) + ", " + to_string(hi) + ")");
    }
};

// The uniform family L0 = a*x, L1 = a*x + 1 - a with mask point p; the
// canonical conjugacy target. Parameters are high-precision because they
// typically come out of root certification.
struct UniformSystem {
    Real a;
    Real p;

    UniformSystem(Real slope, Real mask_point) : a(std::move(slope)), p(std::move(mask_point)) {
        if (!(a > Real(0.5) && a < 1))
            throw DomainError("uniform slope " + to_string(a) + " outside (1/2, 1)");
        if (!(p > 1 - a && p < a))
            throw DomainError("uniform mask point " + to_string(p) + " outside (1-a, a)");
    }
};

inline OverlappingIFS uniform_ifs(const Rational& a) {
    return OverlappingIFS{MonotoneMap::affine(a, Rational(0)),
                          MonotoneMap::affine(a, 1 - a)};
}

inline MaskedSystem uniform_masked(const Rational& a, const Rational& p, MaskVariant v) {
    return MaskedSystem(uniform_ifs(a), p, v);
}

// Dyadic-rational snapshot of a real-parameter uniform system, usable by the
// exact-orbit machinery. Exact conversion of the stored float values.
inline MaskedSystem rationalized(const UniformSystem& u, MaskVariant v) {
    return uniform_masked(to_rational(u.a), to_rational(u.p), v);
}

}  // namespace ifsdyn
