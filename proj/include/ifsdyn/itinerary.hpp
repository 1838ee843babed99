#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "ifsdyn/errors.hpp"
#include "ifsdyn/system.hpp"
#include "ifsdyn/word.hpp"

namespace ifsdyn {

// One application of the expanding map T_q^±. The mask decides the branch:
// Plus sends x to the left branch iff x < q, Minus iff x <= q. Ties at q are
// resolved by the mask membership itself, never by a tolerance.
inline std::pair<std::uint8_t, Rational> step(const MaskedSystem& sys, const Rational& x) {
    if (!in_unit_interval(x)) throw DomainError("step: x outside [0,1]");
    const bool left = sys.variant == MaskVariant::Plus ? x < sys.q : x <= sys.q;
    if (left) return {0, invert(sys.ifs.f0, x)};
    return {1, invert(sys.ifs.f1, x)};
}

// First `depth` symbols of the itinerary of x, with exact period detection:
// every orbit state is stored, and a revisit certifies eventual periodicity.
// Once certified, the remaining symbols are filled from the cycle.
inline Itinerary itinerary(const MaskedSystem& sys, const Rational& x, std::size_t depth) {
    if (depth < 1) throw DomainError("itinerary: depth must be >= 1");
    Itinerary result;
    std::map<Rational, std::size_t> visited;
    Rational current = x;
    for (std::size_t k = 0; k < depth; ++k) {
        const auto [it, inserted] = visited.emplace(current, k);
        if (!inserted) {
            const std::size_t first = it->second;
            result.period = PeriodInfo{first, k - first};
            while (result.prefix.size() < depth)
                result.prefix.push_back(result.symbol_at(result.prefix.size()));
            return result;
        }
        auto [symbol, next] = step(sys, current);
        result.prefix.push_back(symbol);
        current = std::move(next);
    }
    return result;
}

// Finite prefixes of the critical itineraries alpha = tau^-(q), beta =
// tau^+(q). Everything downstream (admissibility, the kneading series) is a
// function of this pair.
struct CriticalPair {
    Itinerary alpha;
    Itinerary beta;
    Rational q;
    std::size_t depth = 0;
};

inline CriticalPair critical_itineraries(const OverlappingIFS& ifs, const Rational& q,
                                         std::size_t depth) {
    CriticalPair crit;
    crit.q = q;
    crit.depth = depth;
    crit.alpha = itinerary(MaskedSystem(ifs, q, MaskVariant::Minus), q, depth);
    crit.beta = itinerary(MaskedSystem(ifs, q, MaskVariant::Plus), q, depth);
    // q belongs to the closure of both mask cells, so the first symbols are
    // forced; anything else is an internal invariant violation.
    if (crit.alpha.prefix[0] != 0 || crit.beta.prefix[0] != 1)
        throw Error("critical itineraries must start with 0 and 1");
    return crit;
}

inline CriticalPair critical_itineraries(const MaskedSystem& sys, std::size_t depth) {
    return critical_itineraries(sys.ifs, sys.q, depth);
}

}  // namespace ifsdyn
