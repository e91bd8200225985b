#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "seljac/errors.hpp"

namespace seljac {

/// Integer partition: weakly decreasing positive parts; the empty list is the
/// empty partition.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<long> parts) : Partition(std::vector<long>(parts)) {}
    explicit Partition(std::vector<long> parts) : parts_(std::move(parts)) {
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw DomainError("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw DomainError("Partition: parts must be weakly decreasing");
        }
    }

    /// Hook shape [(k-i), 1^i]; needs k >= 1 and 0 <= i <= k-1.
    static Partition hook(long k, long i) {
        if (k < 1 || i < 0 || i > k - 1) throw DomainError("Partition::hook: bad indices");
        std::vector<long> p;
        p.push_back(k - i);
        for (long j = 0; j < i; ++j) p.push_back(1);
        return Partition(std::move(p));
    }

    const std::vector<long>& parts() const { return parts_; }
    long part(size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    long length() const { return static_cast<long>(parts_.size()); }
    long weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }
    bool empty() const { return parts_.empty(); }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<long> parts_;
};

} // namespace seljac
