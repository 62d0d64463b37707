#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "syncx/word.hpp"

namespace syncx {

/// Closed interval; an absent upper end means unbounded above.
struct Bound {
    std::int64_t lower = 0;
    std::optional<std::int64_t> upper;

    bool contains(std::int64_t v) const { return v >= lower && (!upper || v <= *upper); }
    bool operator==(const Bound&) const = default;
};

enum class ClaimStatus { Pass, Fail, BoundOk };

const char* status_id(ClaimStatus status);

/**
 * Outcome of one quantitative check. Exact claims use an integer
 * `expected` and report Pass or Fail; bracket claims use a Bound and
 * report BoundOk or Fail. `note` carries the side conditions that were
 * checked alongside the main number.
 */
struct ClaimResult {
    std::string claim_id;
    std::int64_t parameter = 0;
    std::variant<std::int64_t, Bound> expected;
    std::int64_t computed = 0;
    ClaimStatus status = ClaimStatus::Fail;
    std::optional<Word> witness;
    std::string note;

    bool ok() const { return status != ClaimStatus::Fail; }
};

/// prop1_word(m) synchronizes A_{2m-1} to q_1 and has length 2m^2-2m+2.
ClaimResult check_prop1(int m);

/// Shortest extension of Q_U in A_{2m-1} lies in [2 + m*ceil((m-3)/2), greedy length],
/// and greedy_qu_word(m) extends Q_U with exactly the closed-form length.
ClaimResult check_thm_ext_easy(int m);

/// Shortest extension L(m) of Q_U satisfies 0.4 <= L(m)/m^2 <= 1.1 and L(m) > L(m-1).
/// Finite evidence for the m^2 + O(m) growth, m >= 5.
ClaimResult check_ext_hard_growth(int m);

/**
 * In the conservative automaton with T = {q_{m+1}..q_{2m}}: T·a^{-1} = T,
 * T·b^{-1} = {q_m}, and {q_{m+1}..q_{2m-1}}·a^{-1} = T. The shortest extension
 * length L(m) of T must beat L(m-1)·m/(m-1), i.e. grow strictly both in
 * absolute terms and relative to n.
 */
ClaimResult check_conservative(int m);

/// Shortest extension of {q_{m-3}, q_{m-2}} in B_{2m} is 3m-1; B_{2m} strongly connected and synchronizing.
ClaimResult check_prop_b_series(int m);
/// Shortest word avoiding q_{2m} in B_{2m} has length 2m+2.
ClaimResult check_avoid(int m);

/**
 * reset_length(M_n) = n^2-3n+3 by both methods; thm5_word(n) synchronizes
 * with that length; L_{in} = {{q_2..q_{2+i}}} for 0 <= i <= n-3.
 * Irreducibly synchronizing for n >= 4. M_3 is reducible (dropping a leaves
 * the reset word bcb), and the check expects exactly that.
 */
ClaimResult check_thm5(int n);
/// Same for M'_n with n^2-3n+2 and thm5_prime_word. Its L_0 also holds {q_1}
/// (c merges q_1 and q_n), so the L_{in} layer shape is not checked.
ClaimResult check_thm5_prime(int n);

/// Reset length of the Černý automaton C_n is (n-1)^2.
ClaimResult check_cerny(int n);

/// Image-extension worst length of B_{2m} is at least 3m-1.
ClaimResult check_image_extension(int m);

struct SuiteOptions {
    int max_m = 8;
    int max_n = 10;
};

/// Every check over the default parameter ranges, clipped by the options.
std::vector<ClaimResult> run_suite(const SuiteOptions& options = {});

}  // namespace syncx
