#include "sperner/prefix_code.hpp"

#include <stdexcept>

namespace sperner {

namespace {

void require_valid_index(const ConstructionPlan& plan, BlockIndex idx) {
    if (idx.k < plan.k0() || idx.k > plan.k_max())
        throw std::invalid_argument("block index k=" + std::to_string(idx.k) +
                                    " outside plan range");
    if (idx.i < 1 || idx.i > plan.a(idx.k))
        throw std::invalid_argument("block index i=" + std::to_string(idx.i) +
                                    " outside [1, a_k] at k=" + std::to_string(idx.k));
}

}  // namespace

Dyadic codeword_value(const ConstructionPlan& plan, BlockIndex idx) {
    require_valid_index(plan, idx);
    Dyadic rest = plan.s_prev(idx.k) + Dyadic(idx.i, idx.k);
    if (!(rest < Dyadic::one()))
        throw std::runtime_error("codeword value not positive at k=" + std::to_string(idx.k) +
                                 ", i=" + std::to_string(idx.i) +
                                 ": construction state corrupt (Kraft budget exhausted)");
    return Dyadic::one() - rest;
}

BitString codeword(const ConstructionPlan& plan, BlockIndex idx) {
    return binary_digits(codeword_value(plan, idx), idx.k);
}

bool CodewordStream::done() const {
    if (!started_) return plan_->k_max() < plan_->k0();
    return k_ >= plan_->k_max() && i_ >= plan_->a(k_);
}

std::pair<BlockIndex, BitString> CodewordStream::next() {
    if (done()) throw std::out_of_range("CodewordStream::next past the planned range");
    if (!started_) {
        started_ = true;
        k_ = plan_->k0();
        i_ = 1;
    } else if (i_ < plan_->a(k_)) {
        ++i_;
    } else {
        ++k_;
        i_ = 1;
    }
    try {
        value_ = value_.widened(k_) - Dyadic(1, k_);
    } catch (const std::domain_error&) {
        value_ = Dyadic::zero();
    }
    if (value_.is_zero())
        throw std::runtime_error("codeword value not positive at k=" + std::to_string(k_) +
                                 ", i=" + std::to_string(i_) +
                                 ": construction state corrupt (Kraft budget exhausted)");
    return {BlockIndex{k_, i_}, binary_digits(value_, k_)};
}

std::vector<std::pair<BlockIndex, BitString>> codewords_up_to(const ConstructionPlan& plan,
                                                              long k_max) {
    if (k_max > plan.k_max()) throw std::invalid_argument("codewords_up_to: beyond plan range");
    std::vector<std::pair<BlockIndex, BitString>> out;
    CodewordStream stream(plan);
    while (!stream.done()) {
        auto item = stream.next();
        if (item.first.k > k_max) break;
        out.push_back(std::move(item));
    }
    return out;
}

std::optional<PrefixFreeWitness> check_prefix_free(const std::vector<BitString>& words) {
    for (std::size_t t = 0; t < words.size(); ++t) {
        for (std::size_t u = t + 1; u < words.size(); ++u) {
            if (words[t].is_prefix_of(words[u]))
                return PrefixFreeWitness{t, u, words[t], words[u]};
            if (words[u].is_prefix_of(words[t]))
                return PrefixFreeWitness{u, t, words[u], words[t]};
        }
    }
    return std::nullopt;
}

std::optional<ReverseLexWitness> check_reverse_lex(const std::vector<BitString>& words) {
    for (std::size_t t = 1; t < words.size(); ++t) {
        const BitString& a = words[t - 1];
        const BitString& b = words[t];
        auto fd = first_difference(a, b);
        if (!fd)
            return ReverseLexWitness{t - 1, t, a, b,
                                     "no differing position within the common length"};
        if (!a.bit(*fd) || b.bit(*fd))
            return ReverseLexWitness{t - 1, t, a, b,
                                     "later word is lexicographically larger at position " +
                                         std::to_string(*fd)};
    }
    return std::nullopt;
}

}  // namespace sperner
