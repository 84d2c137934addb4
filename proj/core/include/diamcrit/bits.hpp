#ifndef DIAMCRIT_BITS_HPP
#define DIAMCRIT_BITS_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>

namespace diamcrit {

using Word = std::uint64_t;
inline constexpr int kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
}

inline bool test_bit(std::span<const Word> row, int i) {
    return (row[static_cast<std::size_t>(i) / kWordBits] >>
            (static_cast<std::size_t>(i) % kWordBits)) & 1u;
}

inline void set_bit(std::span<Word> row, int i) {
    row[static_cast<std::size_t>(i) / kWordBits] |=
        Word{1} << (static_cast<std::size_t>(i) % kWordBits);
}

inline void clear_bit(std::span<Word> row, int i) {
    row[static_cast<std::size_t>(i) / kWordBits] &=
        ~(Word{1} << (static_cast<std::size_t>(i) % kWordBits));
}

inline std::size_t popcount(std::span<const Word> row) {
    std::size_t c = 0;
    for (Word w : row) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

inline std::size_t intersection_count(std::span<const Word> a, std::span<const Word> b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return c;
}

inline bool intersects(std::span<const Word> a, std::span<const Word> b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i]) return true;
    return false;
}

// Calls fn(i) for every set bit index i < nbits.
template <typename Fn>
void for_each_bit(std::span<const Word> row, int nbits, Fn&& fn) {
    const std::size_t nwords = words_for(static_cast<std::size_t>(nbits));
    for (std::size_t wi = 0; wi < nwords; ++wi) {
        Word w = row[wi];
        while (w) {
            int b = std::countr_zero(w);
            int idx = static_cast<int>(wi) * kWordBits + b;
            if (idx >= nbits) return;
            fn(idx);
            w &= w - 1;
        }
    }
}

}  // namespace diamcrit

#endif  // DIAMCRIT_BITS_HPP
