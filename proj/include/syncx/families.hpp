#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "syncx/dfa.hpp"
#include "syncx/state_set.hpp"
#include "syncx/word.hpp"

namespace syncx {

enum class FamilyName { AOdd, AEven, Conservative, BSeries, MSeries, MPrime, Cerny };

/// A family and its parameter: m for the 2m-state families, n otherwise.
struct FamilySpec {
    FamilyName name;
    int param;
};

std::string_view family_id(FamilyName name);
/// Accepts the ids above plus "m" for m-series. nullopt if unknown.
std::optional<FamilyName> parse_family(std::string_view id);

/// Construct the automaton of a family. Throws ConstructionError on a bad parameter.
Dfa make_family(FamilySpec spec);

/**
 * A_{2m-1}, m >= 3, letters {a, b}.
 *   a: q_m -> q_1, q_{2m-1} -> q_{m+1}, otherwise q_i -> q_{i+1}
 *   b: fixes q_1..q_{m-1}, swaps q_m and q_{2m-1}, q_i -> q_{i-m} for m+1 <= i <= 2m-2
 */
Dfa a_odd(int m);

/// A_{2m}, m >= 3: a-cycles (q_1..q_m), (q_{m+1}..q_{2m}); b as in A_{2m-1}
/// with q_{2m} in the role of q_{2m-1} and q_{2m-1} -> q_m.
Dfa a_even(int m);

/// The conservative-extension counterexample, n = 2m, m >= 3.
/// a: cycles (q_1..q_m), (q_{m+1}..q_{2m-1}), q_{2m} -> q_{m+1}.
/// b: fixes q_1..q_{m-1}, swaps q_m and q_{2m}, q_{m+i} -> q_i (1 <= i <= m-2), q_{2m-1} -> q_{m-1}.
Dfa conservative(int m);

/// B_{2m}, m >= 4.
/// a: cycles (q_1..q_m), (q_{m+1}..q_{2m-1}), loop on q_{2m}.
/// b: fixes q_1..q_{m-2} and q_{m+1}..q_{2m-3}, swaps q_{m-1} and q_{2m-2},
///    swaps q_{2m-1} and q_{2m}, q_m -> q_{2m}.
Dfa b_series(int m);

/// M_n, n >= 3, letters {a, b, c}.
/// a: q_i -> q_{i+1} (i < n), q_n -> q_2; b: q_1 -> q_2, fixes the rest; c: swaps q_1 and q_n.
Dfa m_series(int n);
/// M'_n: as M_n except c maps q_n -> q_1 and fixes every other state.
Dfa m_prime_series(int n);

/// Černý automaton C_n, n >= 2: a is the cyclic shift, b maps q_1 -> q_2.
Dfa cerny(int n);

enum class SubsetName { QU, QD };

/// Q_U = {q_{m+1}, ..} (upper cycle) and Q_D = {q_1, .., q_m} of A_{2m-1} / A_{2m}.
/// Throws PreconditionError for other families.
StateSet named_subset(FamilySpec family, SubsetName name);

/// In A_{2m-1}: q ∈ S ∩ Q_U is covered when q·b ∈ S.
/// Throws PreconditionError unless dfa has odd n and q ∈ S ∩ Q_U.
bool is_covered(const Dfa& dfa, StateSet s, State q);

/// b a b a^m b (a^{m-1} b a^m b)^{m-2}, synchronizes A_{2m-1} to q_1.
Word prop1_word(int m);
/// a c b (a^{n-2} c b)^{n-3}, synchronizes M_n.
Word thm5_word(int n);
/// c b (a^{n-2} c b)^{n-3}, synchronizes M'_n.
Word thm5_prime_word(int n);

/// b a^{2m-3} b a^2: maps {q_m} back to a set whose lower part is {q_1, q_m}.
Word greedy_seed_word(int m);

/**
 * Word extending Q_U in A_{2m-1} built from the greedy strategy:
 * b a^t (b a^{2m-1})^{d-2} (b a^{2m-3} b a^2) b, shortest over d >= 2 and
 * 0 <= t <= 2m-1 among those with |Q_U w^{-1}| > |Q_U|.
 * Throws ConstructionError for m < 4 or if no candidate works.
 */
Word greedy_qu_word(int m);

/// Length of greedy_qu_word(m) as stated in closed form:
/// m^2 - 3m/2 + 4 for even m, m^2 - m + 2 for odd m.
int greedy_qu_length(int m);

}  // namespace syncx
