#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace ihs {

/// A natural number extended with a distinguished infinity.
///
/// Infinity compares greater than every finite value and absorbs
/// subtraction: infinity - k == infinity. Finite values subtract
/// saturating at zero.
class ExtendedNat {
public:
    ExtendedNat() : value_(0), infinite_(false) {}
    ExtendedNat(std::uint64_t value) : value_(value), infinite_(false) {}

    static ExtendedNat infinity() {
        ExtendedNat e;
        e.infinite_ = true;
        return e;
    }

    bool is_infinite() const { return infinite_; }

    std::uint64_t finite_value() const {
        if (infinite_)
            throw std::logic_error("ExtendedNat: finite_value() on infinity");
        return value_;
    }

    ExtendedNat minus(std::uint64_t k) const {
        if (infinite_)
            return *this;
        return ExtendedNat(value_ >= k ? value_ - k : 0);
    }

    friend bool operator==(const ExtendedNat& a, const ExtendedNat& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }

    friend std::strong_ordering operator<=>(const ExtendedNat& a, const ExtendedNat& b) {
        if (a.infinite_ && b.infinite_)
            return std::strong_ordering::equal;
        if (a.infinite_)
            return std::strong_ordering::greater;
        if (b.infinite_)
            return std::strong_ordering::less;
        return a.value_ <=> b.value_;
    }

    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

    /// Parses a decimal literal or the string "inf". Returns nullopt on junk.
    static std::optional<ExtendedNat> parse(const std::string& text) {
        if (text == "inf")
            return infinity();
        if (text.empty())
            return std::nullopt;
        std::uint64_t v = 0;
        for (char c : text) {
            if (c < '0' || c > '9')
                return std::nullopt;
            if (v > (UINT64_MAX - (c - '0')) / 10)
                return std::nullopt;
            v = v * 10 + (c - '0');
        }
        return ExtendedNat(v);
    }

private:
    std::uint64_t value_;
    bool infinite_;
};

}  // namespace ihs
