#pragma once

#include <optional>
#include <span>
#include <vector>

#include "coded_caching/rational.hpp"

namespace coded_caching {

/// A (memory, rate) pair, both in units of files.
struct RatePoint {
    Rational memory;
    Rational rate;

    friend bool operator==(const RatePoint&, const RatePoint&) = default;
};

/// Convex piecewise-linear function given by its vertices (strictly
/// increasing memory, nondecreasing slopes).
class PiecewiseLinearCurve {
public:
    explicit PiecewiseLinearCurve(std::vector<RatePoint> vertices);

    [[nodiscard]] const std::vector<RatePoint>& vertices() const noexcept { return vertices_; }

    /// Linear interpolation between the bracketing vertices.
    /// Throws InvalidParameter outside [first.memory, last.memory].
    [[nodiscard]] Rational evaluate(const Rational& memory) const;

private:
    std::vector<RatePoint> vertices_;
};

/// Lower convex hull of `points`. Collinear interior points are dropped.
[[nodiscard]] PiecewiseLinearCurve lower_convex_hull(std::span<const RatePoint> points);

/// Which constructive scheme realises an envelope vertex.
enum class VertexScheme {
    broadcast,  ///< M = 0: send every distinct requested file
    coded,      ///< M = tN/K, 1 <= t <= K-1: subset placement + XOR delivery
    uncoded,    ///< M = tN/K: cache the same M/N of every file (includes M = N)
};

struct EnvelopeVertex {
    RatePoint point;
    VertexScheme scheme = VertexScheme::coded;
    int t = 0;
};

/// The achievable memory-rate curve R_C(M) with scheme annotations.
class AchievableEnvelope {
public:
    AchievableEnvelope(int files, int users, std::vector<EnvelopeVertex> vertices);

    [[nodiscard]] int files() const noexcept { return files_; }
    [[nodiscard]] int users() const noexcept { return users_; }
    [[nodiscard]] const std::vector<EnvelopeVertex>& vertices() const noexcept { return vertices_; }
    [[nodiscard]] const PiecewiseLinearCurve& curve() const noexcept { return curve_; }
    [[nodiscard]] Rational evaluate(const Rational& memory) const { return curve_.evaluate(memory); }

private:
    int files_;
    int users_;
    std::vector<EnvelopeVertex> vertices_;
    PiecewiseLinearCurve curve_;
};

/// min{(K-t)/(t+1), N - tN/K}: the corner rate at M = tN/K.
[[nodiscard]] Rational rate_coded_corner(int files, int users, int t);

/// Lower convex envelope of the corner points t = 0..K.
[[nodiscard]] AchievableEnvelope achievable_envelope(int files, int users);

/// R_C(M), evaluated on a freshly computed envelope.
[[nodiscard]] Rational achievable_rate(int files, int users, const Rational& memory);

/// K (1 - M/N) min{1, N/K}.
[[nodiscard]] Rational rate_uncoded(int files, int users, const Rational& memory);

/// max over s = 1..min{N,K} of s - s M / floor(N/s), clamped at 0.
[[nodiscard]] Rational cutset_bound(int files, int users, const Rational& memory);

/// Exact tradeoff for two files and two users: max{2-2M, 3/2-M, 1-M/2, 0}.
[[nodiscard]] Rational exact_tradeoff_2x2(const Rational& memory);

/// R_C(M) / cutset_bound(M); nullopt when the bound is 0.
[[nodiscard]] std::optional<Rational> gap_ratio(int files, int users, const Rational& memory);
[[nodiscard]] std::optional<Rational> gap_ratio(const AchievableEnvelope& envelope, const Rational& memory);

}  // namespace coded_caching
