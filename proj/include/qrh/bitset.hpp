#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qrh {

using Word = std::uint64_t;
using RowView = std::span<const Word>;
using MutableRowView = std::span<Word>;

constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

inline bool test_bit(RowView row, std::size_t i) { return (row[i / kWordBits] >> (i % kWordBits)) & 1U; }
inline void set_bit(MutableRowView row, std::size_t i) { row[i / kWordBits] |= Word{1} << (i % kWordBits); }
inline void clear_bit(MutableRowView row, std::size_t i) { row[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

inline std::size_t popcount(RowView a) {
    std::size_t c = 0;
    for (Word w : a) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

inline std::size_t popcount_and(RowView a, RowView b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return c;
}

inline std::size_t popcount_and(RowView a, RowView b, RowView c) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < a.size(); ++i) n += static_cast<std::size_t>(std::popcount(a[i] & b[i] & c[i]));
    return n;
}

/// Fixed-size dynamic bitset. Thin owner around a word vector so that rows
/// stored inside larger flat arrays and standalone sets share the span API.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_(words_for(bits), 0) {}

    std::size_t size() const { return bits_; }
    bool test(std::size_t i) const { return test_bit(words_, i); }
    void set(std::size_t i) { set_bit(words_, i); }
    void reset(std::size_t i) { clear_bit(words_, i); }
    void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }
    std::size_t count() const { return popcount(words_); }
    bool none() const {
        for (Word w : words_) if (w) return false;
        return true;
    }

    RowView view() const { return words_; }
    MutableRowView view() { return words_; }

    Bitset& operator&=(RowView other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other[i];
        return *this;
    }
    Bitset& operator|=(RowView other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other[i];
        return *this;
    }

    /// Clear every bit with index <= i.
    void clear_through(std::size_t i) {
        std::size_t w = i / kWordBits;
        for (std::size_t k = 0; k < w && k < words_.size(); ++k) words_[k] = 0;
        if (w < words_.size()) {
            std::size_t b = i % kWordBits;
            words_[w] &= (b == kWordBits - 1) ? Word{0} : ~((Word{2} << b) - 1);
        }
    }

    /// Index of the first set bit at or after `from`, or size() if none.
    std::size_t find_next(std::size_t from) const {
        if (from >= bits_) return bits_;
        std::size_t w = from / kWordBits;
        Word cur = words_[w] & (~Word{0} << (from % kWordBits));
        while (true) {
            if (cur) {
                std::size_t idx = w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur));
                return idx < bits_ ? idx : bits_;
            }
            if (++w >= words_.size()) return bits_;
            cur = words_[w];
        }
    }
    std::size_t find_first() const { return find_next(0); }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word cur = words_[w];
            while (cur) {
                f(w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur)));
                cur &= cur - 1;
            }
        }
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    std::size_t bits_ = 0;
    std::vector<Word> words_;
};

template <typename F>
void for_each_bit(RowView row, F&& f) {
    for (std::size_t w = 0; w < row.size(); ++w) {
        Word cur = row[w];
        while (cur) {
            f(w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur)));
            cur &= cur - 1;
        }
    }
}

}  // namespace qrh
