#include "lozenge/shuffle.hpp"

#include <stdexcept>

#include "lozenge/gtp.hpp"

namespace lozenge {

ShuffleSpec::ShuffleSpec(RowSet u, RowSet l, RowSet s)
    : U(std::move(u)), L(std::move(l)), S(std::move(s)) {
  RowSet common = row_intersection(U, L);
  if (!row_intersection(S, common).empty())
    throw std::invalid_argument("shuffle set must avoid positions common to both dent rows");
  if (!row_difference(S, row_union(U, L)).empty())
    throw std::invalid_argument("shuffle set must consist of dent positions");
}

std::pair<RowSet, RowSet> shuffle(const ShuffleSpec& spec) {
  RowSet u_prime = row_union(row_difference(spec.U, spec.S), row_intersection(spec.L, spec.S));
  RowSet l_prime = row_union(row_difference(spec.L, spec.S), row_intersection(spec.U, spec.S));
  if (row_intersection(u_prime, l_prime) != row_intersection(spec.U, spec.L) ||
      row_union(u_prime, l_prime) != row_union(spec.U, spec.L))
    throw std::logic_error("shuffle changed the dent partition");
  return {std::move(u_prime), std::move(l_prime)};
}

ExactCount count_dented(const RowSet& U, const RowSet& L) {
  return count_formula(U) * count_formula(L);
}

ExactCount count_dented_factored(const RowSet& U, const RowSet& L) {
  if (U.empty() || L.empty()) throw std::invalid_argument("dent rows must be nonempty");
  SetSplit split = set_algebra(U, L);
  RowSet priv = row_union(split.a_private, split.b_private);
  ExactCount num = pair_product(split.a_private, split.a_private);
  num *= pair_product(split.b_private, split.b_private);
  num *= pair_product(priv, split.common);
  num *= pair_product(split.common, priv);
  ExactCount common_sq = pair_product(split.common, split.common);
  num *= common_sq;
  num *= common_sq;
  ExactCount den = superfactorial(U.size()) * superfactorial(L.size());
  ExactCount quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (rem != 0) throw std::logic_error("factored dented count is not an integer");
  return quot;
}

ExactRatio shuffle_ratio_closed_form(const ShuffleSpec& spec) {
  auto [u_prime, l_prime] = shuffle(spec);
  if (spec.U.empty() || spec.L.empty() || u_prime.empty() || l_prime.empty())
    throw std::invalid_argument("count ratio needs nonempty rows on both sides of the shuffle");
  SetSplit before = set_algebra(spec.U, spec.L);
  SetSplit after = set_algebra(u_prime, l_prime);
  ExactCount num = pair_product(before.a_private, before.a_private);
  num *= pair_product(before.b_private, before.b_private);
  num *= superfactorial(u_prime.size());
  num *= superfactorial(l_prime.size());
  ExactCount den = pair_product(after.a_private, after.a_private);
  den *= pair_product(after.b_private, after.b_private);
  den *= superfactorial(spec.U.size());
  den *= superfactorial(spec.L.size());
  return make_ratio(num, den);
}

RestrictedSpec::RestrictedSpec(RowSet u, RowSet l, RowSet v, RowSet b)
    : U(std::move(u)), L(std::move(l)), V(std::move(v)), B(std::move(b)) {
  if (!row_difference(V, row_intersection(U, L)).empty())
    throw std::invalid_argument("V must be a subset of the common dent positions");
  if (!row_intersection(B, blocked()).empty())
    throw std::invalid_argument("B must avoid the blocked positions (U ∪ L) \\ V");
}

RowSet RestrictedSpec::blocked() const { return row_difference(row_union(U, L), V); }

ExactRatio restricted_prefix(const RestrictedSpec& spec) {
  if (spec.U.empty() || spec.L.empty())
    throw std::invalid_argument("dent rows must be nonempty");
  SetSplit split = set_algebra(spec.U, spec.L);
  ExactCount num = pair_product(split.a_private, split.a_private);
  num *= pair_product(split.b_private, split.b_private);
  ExactCount den = superfactorial(spec.U.size()) * superfactorial(spec.L.size());
  return make_ratio(num, den);
}

ExactCount restricted_position_sum(const RestrictedSpec& spec) {
  SetSplit split = set_algebra(spec.U, spec.L);
  RowSet priv = row_union(split.a_private, split.b_private);
  RowSet core = row_difference(split.common, spec.V);
  const int take = spec.V.size();
  const auto& pool = spec.B.positions();

  ExactCount total(0);
  std::vector<int> pick(static_cast<size_t>(take));
  auto descend = [&](auto&& self, int start, int depth) -> void {
    if (depth == take) {
      RowSet x = row_union(core, RowSet(std::vector<int>(pick.begin(), pick.end())));
      ExactCount term = pair_product(priv, x);
      term *= pair_product(x, priv);
      ExactCount xx = pair_product(x, x);
      term *= xx;
      term *= xx;
      total += term;
      return;
    }
    for (int i = start; i <= static_cast<int>(pool.size()) - (take - depth); ++i) {
      pick[static_cast<size_t>(depth)] = pool[static_cast<size_t>(i)];
      self(self, i + 1, depth + 1);
    }
  };
  descend(descend, 0, 0);
  return total;
}

ExactCount count_restricted(const RestrictedSpec& spec) {
  if (spec.B.size() < spec.V.size()) return 0;
  ExactRatio total = restricted_prefix(spec);
  total *= ExactRatio(restricted_position_sum(spec));
  if (total.get_den() != 1) throw std::logic_error("restricted count is not an integer");
  return ExactCount(total.get_num());
}

bool verify_shuffle_invariance(const RestrictedSpec& spec, const RowSet& S) {
  ShuffleSpec moves(spec.U, spec.L, S);
  auto [u_prime, l_prime] = shuffle(moves);
  RestrictedSpec shuffled(u_prime, l_prime, spec.V, spec.B);
  return restricted_position_sum(spec) == restricted_position_sum(shuffled);
}

}  // namespace lozenge
