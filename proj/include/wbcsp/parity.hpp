#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace wbcsp {

// Union-find with a parity bit per element (x is related to its root with
// offset 0 or 1) and an optional pinned value per class.  Merging two
// already-related elements with conflicting parity, or pinning a class to
// both values, sets the contradiction flag.
class ParityClasses {
public:
    explicit ParityClasses(uint32_t n) : parent_(n), offset_(n, 0), pin_(n, -1) {
        for (uint32_t i = 0; i < n; ++i) parent_[i] = i;
    }

    uint32_t size() const { return static_cast<uint32_t>(parent_.size()); }

    // (root, parity of v relative to the root)
    std::pair<uint32_t, bool> find(uint32_t v) {
        if (parent_[v] == v) return {v, false};
        auto [root, parity] = find(parent_[v]);
        parent_[v] = root;
        offset_[v] = static_cast<uint8_t>(offset_[v] ^ parity);
        return {root, offset_[v] != 0};
    }

    // Requires x_a xor x_b = parity; returns false on conflict.
    bool merge(uint32_t a, uint32_t b, bool parity) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) {
            if ((pa ^ pb) != parity) contradiction_ = true;
            return !contradiction_;
        }
        parent_[rb] = ra;
        offset_[rb] = static_cast<uint8_t>(pa ^ pb ^ parity);
        if (pin_[rb] >= 0) {
            bool value = (pin_[rb] != 0) ^ (offset_[rb] != 0);
            if (!apply_pin(ra, value)) return false;
        }
        return true;
    }

    // Requires x_v = value; returns false on conflict.
    bool pin(uint32_t v, bool value) {
        auto [root, parity] = find(v);
        return apply_pin(root, value ^ parity);
    }

    // Pinned value of v's class expressed at v, if any.
    std::optional<bool> pinned_value(uint32_t v) {
        auto [root, parity] = find(v);
        if (pin_[root] < 0) return std::nullopt;
        return (pin_[root] != 0) ^ parity;
    }

    bool contradiction() const { return contradiction_; }

private:
    bool apply_pin(uint32_t root, bool value) {
        if (pin_[root] >= 0 && (pin_[root] != 0) != value) {
            contradiction_ = true;
            return false;
        }
        pin_[root] = value ? 1 : 0;
        return true;
    }

    std::vector<uint32_t> parent_;
    std::vector<uint8_t> offset_;  // parity relative to parent
    std::vector<int8_t> pin_;      // -1 unpinned, else 0/1 at roots
    bool contradiction_ = false;
};

}  // namespace wbcsp
