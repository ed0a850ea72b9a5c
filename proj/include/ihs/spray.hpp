#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ihs/stream.hpp"

namespace ihs {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, kept reduced with a positive denominator. Relation
/// predicates are built on these; floating point never enters them.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}
    Rational(BigInt numerator, BigInt denominator);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational& a, const Rational& b) { return a.num_ * b.den_ < b.num_ * a.den_; }

    /// "p/q", or plain "p" for integers.
    std::string to_string() const;

    /// Accepts "p", "-p", "p/q" with nonzero q.
    static std::optional<Rational> parse(const std::string& text);

private:
    BigInt num_;
    BigInt den_;
};

using RationalPoint = std::vector<Rational>;

Rational squared_distance(const RationalPoint& a, const RationalPoint& b);

/// True iff x and y lie on a common sphere around the center: their squared
/// distances to it agree as exact rationals.
bool same_sphere(const RationalPoint& center, const RationalPoint& x, const RationalPoint& y);

/// True iff every min(m+1, n) of the centers are affinely independent,
/// where m is the dimension (exact rank computation on the difference
/// vectors). This is the position condition under which sphere
/// intersections around distinct centers stay small.
bool general_position_check(const std::vector<RationalPoint>& centers);

/// Distinct centers in the rational plane.
struct SprayConfig {
    std::vector<RationalPoint> centers;

    explicit SprayConfig(std::vector<RationalPoint> centers_in);
    int dimension() const { return centers.empty() ? 0 : static_cast<int>(centers.front().size()); }
};

/// First `count` points of the fixed enumeration of the rational plane:
/// reduced pairs (p/q, r/s) ordered by max(|p|, |r|, q, s), then
/// lexicographically by (p, q, r, s).
std::vector<RationalPoint> rational_plane_enumeration(std::uint64_t count);

/// The rational plane with one relation per center, x and y related iff
/// they share a sphere around that center (the plane enumeration above
/// gives a_k). With the profile enabled the centers must be in general
/// position, and every index set of size >= 2 is declared finite: bound 2
/// for pairs, 1 for larger sets.
class SprayStream : public StreamHyperspace {
public:
    explicit SprayStream(SprayConfig config, bool with_profile = true);

    int relation_count() const override { return static_cast<int>(config_.centers.size()); }
    std::string class_key(int relation, std::uint64_t k) const override;
    std::string element_label(std::uint64_t k) const override;
    const DeclaredProfile& declared_profile() const override { return profile_; }
    std::optional<std::uint64_t> tuple_union_bound(std::uint64_t k) const override;

    const RationalPoint& point(std::uint64_t k) const;
    const SprayConfig& config() const { return config_; }

private:
    SprayConfig config_;
    DeclaredProfile profile_;
    mutable std::vector<RationalPoint> cache_;
    mutable std::uint64_t next_shell_ = 1;
};

struct SprayCover {
    Coloring coloring;
    AuditReport report;
};

/// Greedy coloring of the spray stream's prefix plus its audit. The color-i
/// part of the prefix meets every sphere around center i in at most
/// certificate-bound many points. With the profile required, the plane
/// needs at least three centers (two leave the triple-intersection bounds
/// undeclared).
SprayCover cover_with_sprays(const SprayConfig& config, std::uint64_t prefix_length, bool require_profile = true);

}  // namespace ihs
