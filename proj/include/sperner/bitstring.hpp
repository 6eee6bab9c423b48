#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sperner {

/// Finite binary string with 1-indexed positions, dually viewed as the
/// finite subset of N formed by the positions that hold a 1. String
/// identity (operator==, prefix tests) respects length and trailing
/// zeros; the set view (subset_of, set_equals, to_set) does not.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::size_t length);

    static BitString ones(std::size_t length);
    static BitString parse(std::string_view zeros_and_ones);
    static BitString from_set(const std::vector<long>& positions);
    static BitString from_set(const std::vector<long>& positions, std::size_t length);

    std::size_t length() const { return len_; }
    bool bit(std::size_t pos) const;  // pos in [1, length]
    void set_bit(std::size_t pos, bool value);

    std::size_t popcount() const;
    /// Ones strictly after position pos.
    std::size_t popcount_above(std::size_t pos) const;
    std::optional<std::size_t> max_one() const;

    bool subset_of(const BitString& other) const;
    bool set_equals(const BitString& other) const;
    std::vector<long> to_set() const;

    /// True when this string (including an equal string) is an initial
    /// segment of other.
    bool is_prefix_of(const BitString& other) const;
    BitString widened(std::size_t new_length) const;  // appends zeros
    /// New string of the given length whose positions offset+1.. carry
    /// this string's bits; used to place a suffix window.
    BitString shifted(std::size_t offset, std::size_t new_length) const;
    /// Overwrites positions 1..prefix.length() with prefix (must fit).
    void overlay_prefix(const BitString& prefix);

    std::string str() const;
    bool operator==(const BitString& other) const;

private:
    static constexpr std::size_t kWordBits = 64;
    std::size_t word_of(std::size_t pos) const { return (pos - 1) / kWordBits; }
    static std::uint64_t mask_of(std::size_t pos) {
        return std::uint64_t{1} << ((pos - 1) % kWordBits);
    }

    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;  // bits beyond len_ are zero
};

/// First 1-indexed position within the common length where a and b differ.
std::optional<std::size_t> first_difference(const BitString& a, const BitString& b);

/// Lexicographic comparison at the first differing position (the string
/// holding 0 there is smaller). Equal strings and prefix-related pairs
/// have no differing position and compare as nullopt.
std::optional<bool> lex_less(const BitString& a, const BitString& b);

}  // namespace sperner
