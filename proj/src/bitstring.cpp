#include "sperner/bitstring.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sperner {

BitString::BitString(std::size_t length)
    : len_(length), words_((length + kWordBits - 1) / kWordBits, 0) {}

BitString BitString::ones(std::size_t length) {
    BitString s(length);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    if (length % kWordBits != 0 && !s.words_.empty())
        s.words_.back() &= (std::uint64_t{1} << (length % kWordBits)) - 1;
    return s;
}

BitString BitString::parse(std::string_view text) {
    BitString s(text.size());
    for (std::size_t j = 0; j < text.size(); ++j) {
        if (text[j] == '1')
            s.set_bit(j + 1, true);
        else if (text[j] != '0')
            throw std::invalid_argument("BitString::parse: expected only '0'/'1'");
    }
    return s;
}

BitString BitString::from_set(const std::vector<long>& positions) {
    long hi = 0;
    for (long p : positions) hi = std::max(hi, p);
    return from_set(positions, static_cast<std::size_t>(hi));
}

BitString BitString::from_set(const std::vector<long>& positions, std::size_t length) {
    BitString s(length);
    for (long p : positions) {
        if (p < 1 || static_cast<std::size_t>(p) > length)
            throw std::invalid_argument("BitString::from_set: position out of range");
        s.set_bit(static_cast<std::size_t>(p), true);
    }
    return s;
}

bool BitString::bit(std::size_t pos) const {
    if (pos < 1 || pos > len_) throw std::out_of_range("BitString::bit: position out of range");
    return (words_[word_of(pos)] & mask_of(pos)) != 0;
}

void BitString::set_bit(std::size_t pos, bool value) {
    if (pos < 1 || pos > len_) throw std::out_of_range("BitString::set_bit: position out of range");
    if (value)
        words_[word_of(pos)] |= mask_of(pos);
    else
        words_[word_of(pos)] &= ~mask_of(pos);
}

std::size_t BitString::popcount() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::size_t BitString::popcount_above(std::size_t pos) const {
    if (pos >= len_) return 0;
    std::size_t c = 0;
    std::size_t w0 = pos / kWordBits;  // word holding position pos + 1
    for (std::size_t w = w0; w < words_.size(); ++w) {
        std::uint64_t word = words_[w];
        if (w == w0) word &= ~std::uint64_t{0} << (pos % kWordBits);
        c += static_cast<std::size_t>(std::popcount(word));
    }
    return c;
}

std::optional<std::size_t> BitString::max_one() const {
    for (std::size_t w = words_.size(); w-- > 0;) {
        if (words_[w] != 0) {
            int top = 63 - std::countl_zero(words_[w]);
            return w * kWordBits + static_cast<std::size_t>(top) + 1;
        }
    }
    return std::nullopt;
}

bool BitString::subset_of(const BitString& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t b = w < other.words_.size() ? other.words_[w] : 0;
        if ((words_[w] & ~b) != 0) return false;
    }
    return true;
}

bool BitString::set_equals(const BitString& other) const {
    return subset_of(other) && other.subset_of(*this);
}

std::vector<long> BitString::to_set() const {
    std::vector<long> out;
    for (std::size_t p = 1; p <= len_; ++p)
        if (bit(p)) out.push_back(static_cast<long>(p));
    return out;
}

bool BitString::is_prefix_of(const BitString& other) const {
    if (len_ > other.len_) return false;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t a = words_[w];
        std::uint64_t b = other.words_[w];
        std::size_t bits_here = std::min(len_ - w * kWordBits, kWordBits);
        std::uint64_t m = bits_here == kWordBits ? ~std::uint64_t{0}
                                                 : (std::uint64_t{1} << bits_here) - 1;
        if ((a & m) != (b & m)) return false;
    }
    return true;
}

BitString BitString::widened(std::size_t new_length) const {
    if (new_length < len_) throw std::invalid_argument("BitString::widened: shorter than current");
    BitString s(new_length);
    std::copy(words_.begin(), words_.end(), s.words_.begin());
    return s;
}

BitString BitString::shifted(std::size_t offset, std::size_t new_length) const {
    if (offset + len_ > new_length)
        throw std::invalid_argument("BitString::shifted: does not fit");
    BitString s(new_length);
    for (std::size_t p = 1; p <= len_; ++p)
        if (bit(p)) s.set_bit(p + offset, true);
    return s;
}

void BitString::overlay_prefix(const BitString& prefix) {
    if (prefix.len_ > len_) throw std::invalid_argument("BitString::overlay_prefix: too long");
    for (std::size_t p = 1; p <= prefix.len_; ++p) set_bit(p, prefix.bit(p));
}

std::string BitString::str() const {
    std::string s(len_, '0');
    for (std::size_t p = 1; p <= len_; ++p)
        if (bit(p)) s[p - 1] = '1';
    return s;
}

bool BitString::operator==(const BitString& other) const {
    return len_ == other.len_ && words_ == other.words_;
}

std::optional<std::size_t> first_difference(const BitString& a, const BitString& b) {
    std::size_t common = std::min(a.length(), b.length());
    for (std::size_t p = 1; p <= common; ++p)
        if (a.bit(p) != b.bit(p)) return p;
    return std::nullopt;
}

std::optional<bool> lex_less(const BitString& a, const BitString& b) {
    auto fd = first_difference(a, b);
    if (!fd) return std::nullopt;
    return !a.bit(*fd);  // a smaller iff a holds the 0
}

}  // namespace sperner
