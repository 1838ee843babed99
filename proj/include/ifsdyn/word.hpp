#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ifsdyn/errors.hpp"

namespace ifsdyn {

// A finite binary word over {0,1}.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<std::uint8_t> symbols) : symbols_(std::move(symbols)) {}

    static Word from_string(std::string_view text) {
        std::vector<std::uint8_t> s;
        s.reserve(text.size());
        for (char c : text) {
            if (c != '0' && c != '1') throw ParseError("word symbols must be '0' or '1'");
            s.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        return Word(std::move(s));
    }

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return symbols_[i]; }
    void push_back(std::uint8_t s) { symbols_.push_back(s); }
    void pop_back() { symbols_.pop_back(); }

    const std::vector<std::uint8_t>& symbols() const { return symbols_; }

    // Drop the first symbol.
    Word shifted() const {
        if (symbols_.empty()) return Word();
        return Word(std::vector<std::uint8_t>(symbols_.begin() + 1, symbols_.end()));
    }

    Word prefix(std::size_t n) const {
        if (n >= symbols_.size()) return *this;
        return Word(std::vector<std::uint8_t>(symbols_.begin(), symbols_.begin() + n));
    }

    bool is_prefix_of(const Word& other) const {
        if (size() > other.size()) return false;
        for (std::size_t i = 0; i < size(); ++i)
            if (symbols_[i] != other.symbols_[i]) return false;
        return true;
    }

    std::string to_string() const {
        std::string out;
        out.reserve(symbols_.size());
        for (auto s : symbols_) out.push_back(static_cast<char>('0' + s));
        return out;
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& lhs, const Word& rhs) {
        return lhs.symbols_ <=> rhs.symbols_;
    }

private:
    std::vector<std::uint8_t> symbols_;
};

// Verdict of comparing two strings on their common prefix only.
// EqualToDepth means indistinguishable at the available length.
enum class LexOrder { Less, EqualToDepth, Greater };

inline std::string to_string(LexOrder o) {
    switch (o) {
        case LexOrder::Less: return "less";
        case LexOrder::EqualToDepth: return "equal-to-depth";
        default: return "greater";
    }
}

inline LexOrder lex_compare(const Word& u, const Word& v) {
    const std::size_t n = u.size() < v.size() ? u.size() : v.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i] < v[i]) return LexOrder::Less;
        if (u[i] > v[i]) return LexOrder::Greater;
    }
    return LexOrder::EqualToDepth;
}

// Eventual-periodicity certificate: symbols repeat with the given period
// after the preperiod. Only attached when an exact orbit state recurred.
struct PeriodInfo {
    std::size_t preperiod = 0;
    std::size_t period_length = 1;
};

// A computed symbol prefix plus an optional certificate that determines every
// later symbol.
struct Itinerary {
    Word prefix;
    std::optional<PeriodInfo> period;

    std::size_t known_length() const { return prefix.size(); }

    // Symbol at arbitrary index; requires a certificate beyond the prefix.
    std::uint8_t symbol_at(std::size_t k) const {
        if (k < prefix.size()) return prefix[k];
        if (!period) throw DepthError("itinerary symbol beyond computed prefix");
        const auto& p = *period;
        if (prefix.size() < p.preperiod + p.period_length)
            throw DepthError("period certificate extends past stored prefix");
        return prefix[p.preperiod + (k - p.preperiod) % p.period_length];
    }

    bool decides(std::size_t k) const {
        return k < prefix.size() ||
               (period && prefix.size() >= period->preperiod + period->period_length);
    }
};

inline LexOrder lex_compare(const Itinerary& u, const Itinerary& v) {
    return lex_compare(u.prefix, v.prefix);
}

}  // namespace ifsdyn
