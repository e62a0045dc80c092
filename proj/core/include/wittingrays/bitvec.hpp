#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace wittingrays {

/// Fixed-size bit vector backed by 64-bit words.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }
    BitVec& operator&=(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Index of the highest set bit, or -1 when empty.
    int highest_bit() const {
        for (int k = static_cast<int>(w_.size()) - 1; k >= 0; --k)
            if (w_[k]) return 64 * k + 63 - std::countl_zero(w_[k]);
        return -1;
    }

    std::vector<int> support() const {
        std::vector<int> out;
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t w = w_[k];
            while (w) {
                out.push_back(static_cast<int>(64 * k + std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    /// Visit set bits in ascending order.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t w = w_[k];
            while (w) {
                f(static_cast<int>(64 * k + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    friend bool operator==(const BitVec&, const BitVec&) = default;

  private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace wittingrays
