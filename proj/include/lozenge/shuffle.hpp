#pragma once

#include <utility>

#include "lozenge/core.hpp"

namespace lozenge {

// Dent rows U and L plus a shuffle set S drawn from the private dents
// (U ∪ L) \ (U ∩ L). Shuffling moves the S-elements of U to L and vice
// versa; it changes neither U ∩ L nor the private dent set.
struct ShuffleSpec {
  ShuffleSpec(RowSet u, RowSet l, RowSet s);
  RowSet U, L, S;
};

// Returns (U', L') with U' = (U \ S) ∪ (L ∩ S) and L' = (L \ S) ∪ (U ∩ S).
std::pair<RowSet, RowSet> shuffle(const ShuffleSpec& spec);

// Tilings of the dented hexagon with up-dents U and down-dents L: the two
// halves tile independently, so this is the product of the per-row counts.
ExactCount count_dented(const RowSet& U, const RowSet& L);

// The same count through the factored pairwise-difference products over
// U ∩ L and the private dents; equals count_dented on every input.
ExactCount count_dented_factored(const RowSet& U, const RowSet& L);

// count_dented(U, L) / count_dented(U', L') in lowest terms, evaluated from
// the private dents and superfactorials alone: the factors involving U ∩ L
// and the combined private set cancel.
ExactRatio shuffle_ratio_closed_form(const ShuffleSpec& spec);

// Restricted setting: the dented hexagon keeps dents at U \ V and L \ V
// only, which forces |V| verticals crossing the diagonal, and their
// positions are confined to B. B must avoid F = (U ∪ L) \ V.
struct RestrictedSpec {
  RestrictedSpec(RowSet u, RowSet l, RowSet v, RowSet b);
  RowSet U, L, V, B;

  // F: the positions no crossing vertical may use.
  RowSet blocked() const;
};

// P(Ū,Ū) · P(L̄,L̄) / (sf(|U|) · sf(|L|)), in lowest terms.
ExactRatio restricted_prefix(const RestrictedSpec& spec);

// Sum over all V' ⊆ B with |V'| = |V| of
//   P(Ū∪L̄, X) · P(X, Ū∪L̄) · P(X, X)^2  with  X = ((U∩L) \ V) ∪ V'.
// Depends only on Ū∪L̄, (U∩L) \ V and B, so it is invariant under shuffling.
ExactCount restricted_position_sum(const RestrictedSpec& spec);

// restricted_prefix * restricted_position_sum, checked to be an integer.
// Returns 0 when |B| < |V|.
ExactCount count_restricted(const RestrictedSpec& spec);

// True iff the position sum is identical before and after shuffling by S.
// The prefix may change; the full counts differ exactly by the closed-form
// ratio above.
bool verify_shuffle_invariance(const RestrictedSpec& spec, const RowSet& S);

}  // namespace lozenge
