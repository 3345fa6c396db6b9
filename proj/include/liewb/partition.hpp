#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "liewb/errors.hpp"

namespace liewb {

// Integer partition: a weakly decreasing sequence of positive parts. The empty
// partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int x : parts_)
            if (x <= 0) throw DomainError("Partition: parts must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    }
    static Partition single(int part) { return Partition(std::vector<int>{part}); }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }

    // Multiplicity of a given part value.
    int multiplicity(int value) const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
    }

    // Multiset union of parts (product of power sums merges this way).
    Partition merged(const Partition& o) const {
        std::vector<int> v(parts_);
        v.insert(v.end(), o.parts_.begin(), o.parts_.end());
        return Partition(std::move(v));
    }

    // Each part multiplied by r >= 1.
    Partition scaled(int r) const {
        if (r < 1) throw DomainError("Partition::scaled: factor must be >= 1");
        std::vector<int> v(parts_);
        for (int& x : v) x *= r;
        return Partition(std::move(v));
    }

    // z_lambda = prod_i i^{m_i} m_i!  (order of the centralizer of the cycle type).
    // Exact in 64 bits up to weight 20, which is far beyond every use here.
    long long z() const {
        if (weight() > 20) throw DomainError("Partition::z: weight too large for 64-bit result");
        long long z = 1;
        int run = 1;
        for (size_t i = 0; i < parts_.size(); ++i) {
            z *= parts_[i];
            if (i + 1 < parts_.size() && parts_[i + 1] == parts_[i]) {
                ++run;
                z *= run;
            } else {
                run = 1;
            }
        }
        return z;
    }

    // True if this dominates o: both must have equal weight for the usual order;
    // compares partial sums.
    bool dominates(const Partition& o) const {
        int sa = 0, sb = 0;
        size_t n = std::max(parts_.size(), o.parts_.size());
        for (size_t i = 0; i < n; ++i) {
            sa += i < parts_.size() ? parts_[i] : 0;
            sb += i < o.parts_.size() ? o.parts_[i] : 0;
            if (sa < sb) return false;
        }
        return true;
    }

    std::string str() const {
        std::string s = "[";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) {
        return !(a == b);
    }

private:
    std::vector<int> parts_;
};

// Canonical global order on partitions: descending lexicographic on the part
// vectors ([3] before [2,1] before [1,1,1]; a proper prefix comes after its
// extensions, so [2,1] precedes [2]). Used for every ordered container and all
// serialized output, so results are byte-reproducible.
struct PartitionCanonicalLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                            a.parts().begin(), a.parts().end());
    }
};

// All partitions of d (optionally with at most max_len parts) in the canonical
// descending lexicographic order.
inline std::vector<Partition> partitions_of(int d, std::optional<int> max_len = std::nullopt) {
    if (d < 0) throw DomainError("partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<int> cur;
    int cap = max_len.value_or(d);
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(Partition(cur));
            return;
        }
        if (static_cast<int>(cur.size()) >= cap) return;
        for (int a = std::min(rest, maxpart); a >= 1; --a) {
            cur.push_back(a);
            self(self, rest - a, a);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

} // namespace liewb
