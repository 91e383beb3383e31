#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace coded_caching {

/// Exact binomial coefficient C(n, k); 0 when k > n.
/// Throws std::overflow_error if the result does not fit in 64 bits.
[[nodiscard]] std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// A set of distinct 1-based user ids, stored sorted.
class SubsetIndex {
public:
    SubsetIndex() = default;

    /// Throws InvalidParameter unless members are strictly increasing and >= 1.
    explicit SubsetIndex(std::vector<int> members);

    [[nodiscard]] const std::vector<int>& members() const noexcept { return members_; }
    [[nodiscard]] int cardinality() const noexcept { return static_cast<int>(members_.size()); }
    [[nodiscard]] bool contains(int user) const noexcept;
    [[nodiscard]] bool fits_universe(int users) const noexcept;

    /// Copy with `user` removed; `user` must be a member.
    [[nodiscard]] SubsetIndex without(int user) const;

    /// "{1,2}" style rendering.
    [[nodiscard]] std::string str() const;

    friend bool operator==(const SubsetIndex&, const SubsetIndex&) = default;
    friend auto operator<=>(const SubsetIndex& a, const SubsetIndex& b) {
        return a.members_ <=> b.members_;
    }

private:
    std::vector<int> members_;
};

/// All t-subsets of {1..users} in lexicographic order of their sorted members.
[[nodiscard]] std::vector<SubsetIndex> enumerate_subsets(int users, int size);

/// Position of `subset` in enumerate_subsets(users, subset.cardinality()).
[[nodiscard]] std::uint64_t subset_rank(const SubsetIndex& subset, int users);

/// Inverse of subset_rank.
[[nodiscard]] SubsetIndex subset_unrank(std::uint64_t rank, int users, int size);

}  // namespace coded_caching
