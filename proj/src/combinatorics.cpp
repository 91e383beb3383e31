#include "coded_caching/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "coded_caching/errors.hpp"

namespace coded_caching {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    // result * (n - i) is always divisible by (i + 1) because the running
    // value is C(n, i + 1) after the division.
    unsigned __int128 result = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        result = result * (n - i) / (i + 1);
        if (result > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("binomial(" + std::to_string(n) + "," + std::to_string(k) +
                                      ") exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(result);
}

SubsetIndex::SubsetIndex(std::vector<int> members) : members_(std::move(members)) {
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i] < 1) throw InvalidParameter("subset member must be >= 1");
        if (i > 0 && members_[i] <= members_[i - 1])
            throw InvalidParameter("subset members must be strictly increasing");
    }
}

bool SubsetIndex::contains(int user) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), user);
}

bool SubsetIndex::fits_universe(int users) const noexcept {
    return members_.empty() || members_.back() <= users;
}

SubsetIndex SubsetIndex::without(int user) const {
    if (!contains(user)) throw InvalidParameter("user " + std::to_string(user) + " not in " + str());
    SubsetIndex out;
    out.members_.reserve(members_.size() - 1);
    for (int m : members_)
        if (m != user) out.members_.push_back(m);
    return out;
}

std::string SubsetIndex::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(members_[i]);
    }
    return out + "}";
}

std::vector<SubsetIndex> enumerate_subsets(int users, int size) {
    if (users < 1) throw InvalidParameter("user count must be positive");
    if (size < 0 || size > users)
        throw InvalidParameter("subset size " + std::to_string(size) + " outside 0.." +
                               std::to_string(users));
    std::vector<SubsetIndex> out;
    out.reserve(binomial(users, size));
    std::vector<int> current(size);
    std::iota(current.begin(), current.end(), 1);
    while (true) {
        out.emplace_back(current);
        // Advance to the next combination: bump the rightmost member that can move.
        int i = size - 1;
        while (i >= 0 && current[i] == users - size + i + 1) --i;
        if (i < 0) break;
        ++current[i];
        for (int j = i + 1; j < size; ++j) current[j] = current[j - 1] + 1;
    }
    return out;
}

std::uint64_t subset_rank(const SubsetIndex& subset, int users) {
    if (!subset.fits_universe(users))
        throw InvalidParameter("subset " + subset.str() + " not within 1.." + std::to_string(users));
    const auto& m = subset.members();
    const int size = subset.cardinality();
    std::uint64_t rank = 0;
    int prev = 0;
    for (int i = 0; i < size; ++i) {
        for (int v = prev + 1; v < m[i]; ++v) rank += binomial(users - v, size - i - 1);
        prev = m[i];
    }
    return rank;
}

SubsetIndex subset_unrank(std::uint64_t rank, int users, int size) {
    if (size < 0 || size > users) throw InvalidParameter("subset size outside 0..users");
    if (rank >= binomial(users, size))
        throw InvalidParameter("rank " + std::to_string(rank) + " out of range");
    std::vector<int> members;
    members.reserve(size);
    int v = 1;
    for (int i = 0; i < size; ++i) {
        while (true) {
            std::uint64_t block = binomial(users - v, size - i - 1);
            if (rank < block) break;
            rank -= block;
            ++v;
        }
        members.push_back(v++);
    }
    return SubsetIndex{std::move(members)};
}

}  // namespace coded_caching
