#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace oddsub {

// Fixed-width set of vertex indices backed by 64-bit words.
// The width is the vertex count of the graph the set belongs to;
// all binary operations require equal widths.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(uint32_t width) : n_(width), w_((width + 63) / 64, 0) {}

    static VertexSet full(uint32_t width) {
        VertexSet s(width);
        for (auto& w : s.w_) w = ~uint64_t{0};
        s.mask_tail();
        return s;
    }

    static VertexSet single(uint32_t width, uint32_t v) {
        VertexSet s(width);
        s.set(v);
        return s;
    }

    uint32_t width() const { return n_; }

    bool test(uint32_t v) const { return (w_[v >> 6] >> (v & 63)) & 1; }
    void set(uint32_t v) { w_[v >> 6] |= uint64_t{1} << (v & 63); }
    void reset(uint32_t v) { w_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }

    size_t count() const {
        size_t c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }
    bool any() const { return !empty(); }

    void clear() {
        for (auto& w : w_) w = 0;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& operator^=(const VertexSet& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    // set difference
    VertexSet& operator-=(const VertexSet& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.mask_tail();
        return r;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    size_t count_and(const VertexSet& o) const {
        size_t c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }
    // parity of |this & o|, 0 or 1
    unsigned parity_and(const VertexSet& o) const {
        uint64_t x = 0;
        for (size_t i = 0; i < w_.size(); ++i) x ^= w_[i] & o.w_[i];
        return std::popcount(x) & 1;
    }

    // lowest set index, or -1
    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }
    // lowest set index > v, or -1
    int next(uint32_t v) const {
        uint32_t i = (v + 1) >> 6;
        if (i >= w_.size()) return -1;
        uint64_t w = w_[i] & (~uint64_t{0} << ((v + 1) & 63));
        while (true) {
            if (w) return int(i * 64 + std::countr_zero(w));
            if (++i >= w_.size()) return -1;
            w = w_[i];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t w = w_[i];
            while (w) {
                f(uint32_t(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<uint32_t> to_vector() const {
        std::vector<uint32_t> v;
        v.reserve(count());
        for_each([&](uint32_t i) { v.push_back(i); });
        return v;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    // Numeric order of the bit pattern where vertex i has weight 2^i.
    static bool numeric_less(const VertexSet& a, const VertexSet& b) {
        for (size_t i = a.w_.size(); i-- > 0;)
            if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
        return false;
    }

    const std::vector<uint64_t>& words() const { return w_; }

private:
    void mask_tail() {
        if (n_ & 63) w_.back() &= (~uint64_t{0}) >> (64 - (n_ & 63));
        if (n_ == 0 && !w_.empty()) w_.back() = 0;
    }

    uint32_t n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace oddsub
