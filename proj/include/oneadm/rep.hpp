// Character-level representation theory of the dual group: weights of
// its representations are coweights of the given datum.  Dimensions by
// the Weyl product formula, weight multiplicities by the Freudenthal
// recursion, tensor/exterior/symmetric powers and Schur functors on
// weight multisets, all peeled into irreducibles by highest-weight
// subtraction.  Exact integer arithmetic throughout.

#pragma once

#include <map>

#include "oneadm/root_datum.hpp"

namespace oneadm {

struct CharacterMultiset {
    std::map<Coweight, i64> mult;  // full weight support, positive entries
    i64 total = 0;
};

struct DecompositionEntry {
    Coweight hw;
    i64 mult = 0;
    auto operator<=>(const DecompositionEntry&) const = default;
};
using DecompositionList = std::vector<DecompositionEntry>;

// tie-break used when several maximal dominant weights remain during
// peeling; both orders must give the same decomposition
enum class PeelOrder { reverse_lex, forward_lex };

enum class PowerKind { exterior, symmetric };

struct IntegerPartition {
    std::vector<i64> parts;  // weakly decreasing, positive

    i64 size() const;
    int length() const { return static_cast<int>(parts.size()); }
    IntegerPartition conjugate() const;
    auto operator<=>(const IntegerPartition&) const = default;

    // all partitions of d with at most max_len parts
    static std::vector<IntegerPartition> all_of(i64 d, int max_len);
};

// 10^6 unless overridden by the ONEADM_DIM_CAP environment variable
i64 default_dimension_cap();

// lambda must be dominant; exact product formula on the dual datum
i64 weyl_dimension(const RootDatum& g, const Coweight& lambda);

// full weight multiset of the irreducible with highest weight lambda;
// throws std::runtime_error when the dimension exceeds the cap (0 = default)
CharacterMultiset character(const RootDatum& g, const Coweight& lambda, i64 dim_cap = 0);

CharacterMultiset tensor_character(const CharacterMultiset& a, const CharacterMultiset& b);

// decompose a nonnegative W-invariant multiset into irreducibles
DecompositionList peel(const RootDatum& g, const CharacterMultiset& c,
                       PeelOrder order = PeelOrder::reverse_lex, i64 dim_cap = 0);

DecompositionList tensor_decompose(const RootDatum& g, const Coweight& lambda,
                                   const Coweight& mu,
                                   PeelOrder order = PeelOrder::reverse_lex, i64 dim_cap = 0);

// k-th exterior or symmetric power via Adams operations and the Newton
// recursion; intermediate divisions are asserted exact
CharacterMultiset power_character(const CharacterMultiset& c, i64 k, PowerKind kind);

DecompositionList wedge_sym_decompose(const RootDatum& g, const Coweight& lambda, i64 k,
                                      PowerKind kind,
                                      PeelOrder order = PeelOrder::reverse_lex,
                                      i64 dim_cap = 0);

// Schur functor applied to a character, by the determinant of exterior
// powers indexed by the conjugate partition; empty when length(nu)
// exceeds the character's dimension
CharacterMultiset schur_character(const CharacterMultiset& c, const IntegerPartition& nu);

DecompositionList schur_decompose(const RootDatum& g, const CharacterMultiset& c,
                                  const IntegerPartition& nu,
                                  PeelOrder order = PeelOrder::reverse_lex, i64 dim_cap = 0);

// multiplicity of the irreducible with highest weight lambda
i64 hom_multiplicity(const Coweight& lambda, const DecompositionList& target);
i64 hom_multiplicity(const RootDatum& g, const Coweight& lambda,
                     const CharacterMultiset& target);

}  // namespace oneadm
