#include "ihs/spray.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ihs {

Rational::Rational(BigInt numerator, BigInt denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0)
        throw std::invalid_argument("Rational: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) { return Rational(a.num_ * b.num_, a.den_ * b.den_); }

std::string Rational::to_string() const {
    std::string out = num_.str();
    if (den_ != 1) {
        out += '/';
        out += den_.str();
    }
    return out;
}

std::optional<Rational> Rational::parse(const std::string& text) {
    if (text.empty())
        return std::nullopt;
    const auto slash = text.find('/');
    const std::string num_part = text.substr(0, slash == std::string::npos ? text.size() : slash);
    const std::string den_part = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto valid_int = [](const std::string& s) {
        if (s.empty())
            return false;
        std::size_t start = (s[0] == '-') ? 1 : 0;
        if (start == s.size())
            return false;
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };
    if (!valid_int(num_part) || !valid_int(den_part))
        return std::nullopt;
    BigInt den(den_part);
    if (den == 0)
        return std::nullopt;
    return Rational(BigInt(num_part), std::move(den));
}

Rational squared_distance(const RationalPoint& a, const RationalPoint& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("squared_distance: dimension mismatch");
    Rational out;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const Rational d = a[j] - b[j];
        out = out + d * d;
    }
    return out;
}

bool same_sphere(const RationalPoint& center, const RationalPoint& x, const RationalPoint& y) {
    return squared_distance(center, x) == squared_distance(center, y);
}

namespace {

// Exact rank via Gaussian elimination.
int rational_rank(std::vector<std::vector<Rational>> rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col] == Rational(0))
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[row], rows[pivot]);
        for (std::size_t r = row + 1; r < rows.size(); ++r) {
            if (rows[r][col] == Rational(0))
                continue;
            // rows[r] -= rows[r][col]/rows[row][col] * rows[row], scaled to
            // stay in integers-over-integers form.
            const Rational factor = Rational(rows[r][col].num() * rows[row][col].den(),
                                             rows[r][col].den() * rows[row][col].num());
            for (std::size_t c = col; c < cols; ++c)
                rows[r][c] = rows[r][c] - factor * rows[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

bool affinely_independent(const std::vector<const RationalPoint*>& pts) {
    if (pts.size() <= 1)
        return true;
    std::vector<std::vector<Rational>> rows;
    rows.reserve(pts.size() - 1);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<Rational> row(pts[0]->size());
        for (std::size_t j = 0; j < row.size(); ++j)
            row[j] = (*pts[i])[j] - (*pts[0])[j];
        rows.push_back(std::move(row));
    }
    return rational_rank(std::move(rows)) == static_cast<int>(pts.size()) - 1;
}

}  // namespace

bool general_position_check(const std::vector<RationalPoint>& centers) {
    if (centers.empty())
        throw std::invalid_argument("general_position_check: need at least one center");
    const std::size_t m = centers.front().size();
    for (const RationalPoint& c : centers)
        if (c.size() != m)
            throw std::invalid_argument("general_position_check: dimension mismatch");
    const std::size_t k = std::min(m + 1, centers.size());
    // Every k-subset, by ascending index combinations.
    std::vector<std::size_t> choice(k);
    std::iota(choice.begin(), choice.end(), 0);
    while (true) {
        std::vector<const RationalPoint*> pts(k);
        for (std::size_t j = 0; j < k; ++j)
            pts[j] = &centers[choice[j]];
        if (!affinely_independent(pts))
            return false;
        std::size_t j = k;
        while (j > 0 && choice[j - 1] == centers.size() - k + j - 1)
            --j;
        if (j == 0)
            break;
        ++choice[j - 1];
        for (std::size_t r = j; r < k; ++r)
            choice[r] = choice[r - 1] + 1;
    }
    return true;
}

SprayConfig::SprayConfig(std::vector<RationalPoint> centers_in) : centers(std::move(centers_in)) {
    if (centers.empty())
        throw std::invalid_argument("SprayConfig: need at least one center");
    const std::size_t m = centers.front().size();
    if (m == 0)
        throw std::invalid_argument("SprayConfig: zero-dimensional centers");
    for (const RationalPoint& c : centers)
        if (c.size() != m)
            throw std::invalid_argument("SprayConfig: dimension mismatch");
    for (std::size_t i = 0; i < centers.size(); ++i)
        for (std::size_t j = i + 1; j < centers.size(); ++j)
            if (centers[i] == centers[j])
                throw std::invalid_argument("SprayConfig: centers must be pairwise distinct");
}

std::vector<RationalPoint> rational_plane_enumeration(std::uint64_t count) {
    std::vector<RationalPoint> out;
    out.reserve(count);
    for (long long shell = 1; out.size() < count; ++shell) {
        for (long long p = -shell; p <= shell && out.size() < count; ++p)
            for (long long q = 1; q <= shell && out.size() < count; ++q) {
                if (std::gcd(p < 0 ? -p : p, q) != 1)
                    continue;
                for (long long r = -shell; r <= shell && out.size() < count; ++r)
                    for (long long s = 1; s <= shell && out.size() < count; ++s) {
                        if (std::gcd(r < 0 ? -r : r, s) != 1)
                            continue;
                        const long long top = std::max({p < 0 ? -p : p, r < 0 ? -r : r, q, s});
                        if (top != shell)
                            continue;
                        out.push_back({Rational(BigInt(p), BigInt(q)), Rational(BigInt(r), BigInt(s))});
                    }
            }
    }
    return out;
}

namespace {

DeclaredProfile spray_profile(const SprayConfig& config, bool with_profile) {
    const int n = static_cast<int>(config.centers.size());
    const int m = config.dimension();
    std::vector<Mask> members;
    std::vector<std::optional<std::uint64_t>> bounds;
    if (with_profile && n <= 20) {
        for (Mask idx = 0; idx < (Mask{1} << n); ++idx)
            if (mask_size(idx) >= m) {
                members.push_back(idx);
                bounds.emplace_back(mask_size(idx) == m ? 2 : 1);
            }
    }
    return DeclaredProfile(SetSystem(n, std::move(members)), std::move(bounds));
}

}  // namespace

SprayStream::SprayStream(SprayConfig config, bool with_profile)
    : config_(std::move(config)), profile_(spray_profile(config_, with_profile)) {
    if (config_.dimension() != 2)
        throw std::invalid_argument("SprayStream: the fixed enumeration covers the rational plane only");
    if (with_profile && !general_position_check(config_.centers))
        throw std::invalid_argument("SprayStream: profile requested but centers are not in general position");
}

const RationalPoint& SprayStream::point(std::uint64_t k) const {
    while (cache_.size() <= k) {
        const std::uint64_t want = std::max<std::uint64_t>(k + 1, cache_.size() * 2 + 16);
        cache_ = rational_plane_enumeration(want);
    }
    return cache_[k];
}

std::string SprayStream::class_key(int relation, std::uint64_t k) const {
    if (relation < 0 || relation >= relation_count())
        throw std::out_of_range("SprayStream: relation index out of range");
    return squared_distance(config_.centers[relation], point(k)).to_string();
}

std::string SprayStream::element_label(std::uint64_t k) const {
    const RationalPoint& pt = point(k);
    return pt[0].to_string() + "," + pt[1].to_string();
}

std::optional<std::uint64_t> SprayStream::tuple_union_bound(std::uint64_t k) const {
    // Total intersections are single sphere intersections over all centers;
    // with a declared full-set bound b the union over index tuples below k
    // has at most b * (k+1)^n points, for every prefix.
    const auto full_bound = profile_.bound_for(profile_.sets.ground_mask());
    if (!full_bound)
        return std::nullopt;
    const int n = relation_count();
    std::uint64_t tuples = 1;
    for (int i = 0; i < n; ++i) {
        if (tuples > UINT64_MAX / (k + 1))
            return std::nullopt;
        tuples *= k + 1;
    }
    if (tuples > UINT64_MAX / *full_bound)
        return std::nullopt;
    return tuples * *full_bound;
}

SprayCover cover_with_sprays(const SprayConfig& config, std::uint64_t prefix_length, bool require_profile) {
    if (require_profile && config.dimension() == 2 && config.centers.size() < 3)
        throw std::invalid_argument("cover_with_sprays: the plane needs at least three centers");
    // The greedy rule needs the full index set declared, so the stream
    // always carries its profile here.
    SprayStream stream(config, true);
    Coloring coloring = greedy_coloring(stream, prefix_length);
    AuditReport report = acceptability_audit(stream, coloring, prefix_length);
    return SprayCover{std::move(coloring), std::move(report)};
}

}  // namespace ihs
