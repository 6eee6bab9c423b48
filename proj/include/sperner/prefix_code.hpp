#pragma once

#include "sperner/bitstring.hpp"
#include "sperner/dyadic.hpp"
#include "sperner/growth.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sperner {

/// Index (k, i) of codeword c_{k,i} and block F_{k,i}: k >= k0, i in [1, a_k].
struct BlockIndex {
    long k = 0;
    long i = 0;
    friend auto operator<=>(const BlockIndex&, const BlockIndex&) = default;
};

/// Exact digit value 1 - s_{k-1} - i/2^k of codeword idx. Throws if the
/// value is not positive (corrupt construction state).
Dyadic codeword_value(const ConstructionPlan& plan, BlockIndex idx);

/// Closed form: the length-k string carrying codeword_value exactly.
BitString codeword(const ConstructionPlan& plan, BlockIndex idx);

/// Iterative route: seeded at value 1, every emitted string of length k is
/// the previous value widened to exponent k minus 1/2^k. Yields codewords
/// in lexicographically increasing (k, i) index order.
class CodewordStream {
public:
    explicit CodewordStream(const ConstructionPlan& plan) : plan_(&plan), value_(Dyadic::one()) {}
    bool done() const;
    std::pair<BlockIndex, BitString> next();

private:
    const ConstructionPlan* plan_;
    bool started_ = false;
    long k_ = 0;
    long i_ = 0;
    Dyadic value_;
};

std::vector<std::pair<BlockIndex, BitString>> codewords_up_to(const ConstructionPlan& plan,
                                                              long k_max);

struct PrefixFreeWitness {
    std::size_t ancestor_pos = 0;  // indices into the input sequence
    std::size_t descendant_pos = 0;
    BitString ancestor;
    BitString descendant;
};

/// Nothing when no word is an initial segment of another (equal words
/// count as offending); otherwise the first such pair in scan order.
std::optional<PrefixFreeWitness> check_prefix_free(const std::vector<BitString>& words);

struct ReverseLexWitness {
    std::size_t earlier_pos = 0;
    std::size_t later_pos = 0;
    BitString earlier;
    BitString later;
    std::string reason;
};

/// Nothing when the given order is strictly lexicographically decreasing
/// with the earlier word holding the 1 at every first-difference position.
/// Adjacent pairs suffice: the property is transitive across a chain.
std::optional<ReverseLexWitness> check_reverse_lex(const std::vector<BitString>& words);

}  // namespace sperner
