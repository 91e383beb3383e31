#include "coded_caching/scheme_types.hpp"

#include <algorithm>
#include <set>

#include "coded_caching/errors.hpp"

namespace coded_caching {

std::optional<int> SchemeParameters::t() const {
    const Rational t = memory * Rational{users} / Rational{files};
    if (!t.is_integer()) return std::nullopt;
    return static_cast<int>(t.num());
}

DemandVector::DemandVector(std::vector<int> demands, int files)
    : demands_(std::move(demands)), files_(files) {
    if (demands_.empty()) throw InvalidParameter("demand vector must name at least one user");
    for (int d : demands_)
        if (d < 1 || d > files_)
            throw InvalidParameter("demand " + std::to_string(d) + " outside 1.." + std::to_string(files_));
}

int DemandVector::of(int user) const {
    if (user < 1 || user > users()) throw InvalidParameter("user " + std::to_string(user) + " out of range");
    return demands_[user - 1];
}

std::vector<int> DemandVector::distinct() const {
    std::set<int> unique(demands_.begin(), demands_.end());
    return {unique.begin(), unique.end()};
}

std::string DemandVector::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < demands_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(demands_[i]);
    }
    return out + ")";
}

std::string BlockLabel::str() const {
    std::string out = segment ? "seg" + std::to_string(*segment) + ":" : "";
    struct Render {
        std::string operator()(const MulticastLabel& l) const { return "S=" + l.users.str(); }
        std::string operator()(const FileLabel& l) const { return "file=" + std::to_string(l.file); }
        std::string operator()(const SubfileLabel& l) const {
            return "W(" + std::to_string(l.id.file) + "," + l.id.subset.str() + ")";
        }
    };
    return out + std::visit(Render{}, kind);
}

std::size_t DeliverySignal::total_bits() const noexcept {
    std::size_t total = 0;
    for (const auto& b : blocks) total += b.payload.size();
    return total;
}

std::string DeliverySignal::serialize() const {
    std::string out;
    for (const auto& b : blocks) out += b.label.str() + "\t" + b.payload.hex() + "\n";
    return out;
}

void CacheContent::add(std::variant<CachedCombination, CachedPrefix> content, const BitBuffer& bits,
                       std::optional<int> segment) {
    manifest.push_back({std::move(content), payload.size(), bits.size(), segment});
    payload.append(bits);
}

std::string subfile_name(const SubfileId& id, int files, int users) {
    std::string name = files <= 26 ? std::string(1, static_cast<char>('A' + id.file - 1))
                                   : "W" + std::to_string(id.file);
    name += "_{";
    const auto& m = id.subset.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i && users >= 10) name += ',';
        name += std::to_string(m[i]);
    }
    return name + "}";
}

}  // namespace coded_caching
