#include "coded_caching/bounds.hpp"

#include <algorithm>
#include <string>

#include "coded_caching/errors.hpp"

namespace coded_caching {

namespace {

void check_system(int files, int users) {
    if (files < 1 || users < 1) throw InvalidParameter("N and K must be positive");
}

void check_memory(int files, const Rational& memory) {
    if (memory < Rational{0} || memory > Rational{files})
        throw InvalidParameter("memory " + memory.str() + " outside [0, " + std::to_string(files) + "]");
}

// Sign of the turn a -> b -> c; positive for a strict left (convex) turn.
Rational cross(const RatePoint& a, const RatePoint& b, const RatePoint& c) {
    return (b.memory - a.memory) * (c.rate - a.rate) - (b.rate - a.rate) * (c.memory - a.memory);
}

}  // namespace

PiecewiseLinearCurve::PiecewiseLinearCurve(std::vector<RatePoint> vertices)
    : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw InvalidParameter("curve needs at least one vertex");
    for (std::size_t i = 1; i < vertices_.size(); ++i)
        if (!(vertices_[i - 1].memory < vertices_[i].memory))
            throw InvalidParameter("curve vertices must be strictly increasing in memory");
}

Rational PiecewiseLinearCurve::evaluate(const Rational& memory) const {
    if (memory < vertices_.front().memory || memory > vertices_.back().memory)
        throw InvalidParameter("memory " + memory.str() + " outside curve domain");
    auto upper = std::lower_bound(vertices_.begin(), vertices_.end(), memory,
                                  [](const RatePoint& v, const Rational& m) { return v.memory < m; });
    if (upper->memory == memory) return upper->rate;
    auto lower = std::prev(upper);
    Rational slope = (upper->rate - lower->rate) / (upper->memory - lower->memory);
    return lower->rate + slope * (memory - lower->memory);
}

PiecewiseLinearCurve lower_convex_hull(std::span<const RatePoint> points) {
    std::vector<RatePoint> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end(), [](const RatePoint& a, const RatePoint& b) {
        return a.memory < b.memory || (a.memory == b.memory && a.rate < b.rate);
    });
    std::vector<RatePoint> hull;
    for (const auto& p : sorted) {
        if (!hull.empty() && hull.back().memory == p.memory) continue;  // keep the lowest rate
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= Rational{0})
            hull.pop_back();
        hull.push_back(p);
    }
    return PiecewiseLinearCurve{std::move(hull)};
}

AchievableEnvelope::AchievableEnvelope(int files, int users, std::vector<EnvelopeVertex> vertices)
    : files_(files),
      users_(users),
      vertices_(std::move(vertices)),
      curve_([this] {
          std::vector<RatePoint> points;
          for (const auto& v : vertices_) points.push_back(v.point);
          return points;
      }()) {}

Rational rate_coded_corner(int files, int users, int t) {
    check_system(files, users);
    if (t < 0 || t > users) throw InvalidParameter("t outside 0..K");
    const Rational coded{users - t, t + 1};
    const Rational uncoded = Rational{files} - Rational{std::int64_t{t} * files, users};
    return min(coded, uncoded);
}

AchievableEnvelope achievable_envelope(int files, int users) {
    check_system(files, users);
    std::vector<EnvelopeVertex> corners;
    for (int t = 0; t <= users; ++t) {
        EnvelopeVertex v;
        v.t = t;
        v.point = {Rational{std::int64_t{t} * files, users}, rate_coded_corner(files, users, t)};
        if (t == 0)
            v.scheme = VertexScheme::broadcast;
        else if (t == users || Rational{users - t, t + 1} > v.point.rate)
            v.scheme = VertexScheme::uncoded;
        else
            v.scheme = VertexScheme::coded;
        corners.push_back(v);
    }
    std::vector<RatePoint> points;
    for (const auto& c : corners) points.push_back(c.point);
    const auto hull = lower_convex_hull(points);

    // Corner memories are distinct, so each hull vertex maps back to one corner.
    std::vector<EnvelopeVertex> vertices;
    for (const auto& h : hull.vertices()) {
        auto it = std::find_if(corners.begin(), corners.end(),
                               [&](const EnvelopeVertex& c) { return c.point == h; });
        vertices.push_back(*it);
    }
    return AchievableEnvelope{files, users, std::move(vertices)};
}

Rational achievable_rate(int files, int users, const Rational& memory) {
    check_memory(files, memory);
    return achievable_envelope(files, users).evaluate(memory);
}

Rational rate_uncoded(int files, int users, const Rational& memory) {
    check_system(files, users);
    check_memory(files, memory);
    const Rational local = Rational{1} - memory / Rational{files};
    return Rational{users} * local * min(Rational{1}, Rational{files, users});
}

Rational cutset_bound(int files, int users, const Rational& memory) {
    check_system(files, users);
    check_memory(files, memory);
    Rational best{0};
    for (int s = 1; s <= std::min(files, users); ++s) {
        const Rational bound = Rational{s} - Rational{s, files / s} * memory;
        best = max(best, bound);
    }
    return best;
}

Rational exact_tradeoff_2x2(const Rational& memory) {
    check_memory(2, memory);
    Rational best{0};
    best = max(best, Rational{2} - Rational{2} * memory);
    best = max(best, Rational{3, 2} - memory);
    best = max(best, Rational{1} - memory / Rational{2});
    return best;
}

std::optional<Rational> gap_ratio(const AchievableEnvelope& envelope, const Rational& memory) {
    const Rational bound = cutset_bound(envelope.files(), envelope.users(), memory);
    if (bound == Rational{0}) return std::nullopt;
    return envelope.evaluate(memory) / bound;
}

std::optional<Rational> gap_ratio(int files, int users, const Rational& memory) {
    return gap_ratio(achievable_envelope(files, users), memory);
}

}  // namespace coded_caching
