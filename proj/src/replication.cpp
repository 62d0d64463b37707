#include "syncx/replication.hpp"

#include <algorithm>
#include <string>

#include "syncx/errors.hpp"
#include "syncx/extension.hpp"
#include "syncx/families.hpp"
#include "syncx/reset.hpp"

namespace syncx {

const char* status_id(ClaimStatus status) {
    switch (status) {
        case ClaimStatus::Pass: return "pass";
        case ClaimStatus::Fail: return "fail";
        case ClaimStatus::BoundOk: return "bound-ok";
    }
    return "fail";
}

namespace {

ClaimResult exact(std::string id, int parameter, std::int64_t expected, std::int64_t computed, bool side_ok,
                  std::string note) {
    ClaimResult r;
    r.claim_id = std::move(id);
    r.parameter = parameter;
    r.expected = expected;
    r.computed = computed;
    r.status = side_ok && expected == computed ? ClaimStatus::Pass : ClaimStatus::Fail;
    r.note = std::move(note);
    return r;
}

ClaimResult bracket(std::string id, int parameter, Bound expected, std::int64_t computed, bool side_ok,
                    std::string note) {
    ClaimResult r;
    r.claim_id = std::move(id);
    r.parameter = parameter;
    r.expected = expected;
    r.computed = computed;
    r.status = side_ok && expected.contains(computed) ? ClaimStatus::BoundOk : ClaimStatus::Fail;
    r.note = std::move(note);
    return r;
}

std::string yes_no(bool b) { return b ? "yes" : "NO"; }

std::int64_t length_or_minus_one(const std::optional<Word>& w) {
    return w ? static_cast<std::int64_t>(w->size()) : -1;
}

std::optional<Word> qu_extension(int m) {
    return shortest_extending_word(a_odd(m), named_subset({FamilyName::AOdd, m}, SubsetName::QU));
}

std::optional<Word> conservative_extension(int m) {
    return shortest_extending_word(conservative(m), StateSet::label_range(m + 1, 2 * m));
}

std::int64_t ext_easy_lower(int m) { return 2 + static_cast<std::int64_t>(m) * ((m - 3 + 1) / 2); }

// Removing a from M_3 / M'_3 leaves {b, c}, which still synchronizes (bcb, resp. cb);
// irreducibility holds from n = 4 on. At n = 3 the check expects reducibility.
bool irreducible_as_expected(const Dfa& dfa, int n) { return is_irreducibly_synchronizing(dfa) == (n >= 4); }

ClaimResult check_m_family(const char* id, int n, const Dfa& dfa, const Word& word, std::int64_t expected,
                           bool check_layers) {
    const auto length = reset_length(dfa);
    const bool irreducible = irreducible_as_expected(dfa, n);
    const bool word_ok = check_sync_word(dfa, word).has_value() &&
                         static_cast<std::int64_t>(word.size()) == expected;

    // L_{i n} = {{q_2 .. q_{2+i}}}
    const auto trace = inverse_layers(dfa);
    bool layers_ok = true;
    for (int i = 0; check_layers && i <= n - 3; ++i) {
        const auto index = static_cast<std::size_t>(i * n);
        const std::vector<StateSet> want{StateSet::label_range(2, 2 + i)};
        if (index >= trace.layers.size() || trace.layers[index] != want) layers_ok = false;
    }

    auto r = exact(id, n, expected, length ? static_cast<std::int64_t>(*length) : -1,
                   irreducible && word_ok && layers_ok,
                   "both methods agree; irreducibility as expected" + std::string(n >= 4 ? "" : " (reducible at n = 3)") +
                       ": " + yes_no(irreducible) + "; explicit word: " + yes_no(word_ok) +
                       (check_layers ? "; layers L_{in}: " + yes_no(layers_ok) : std::string()));
    r.witness = word;
    return r;
}

}  // namespace

ClaimResult check_prop1(int m) {
    const Dfa dfa = a_odd(m);
    const Word w = prop1_word(m);
    const auto target = check_sync_word(dfa, w);
    const bool to_q1 = target && *target == 0;
    auto r = exact("a-odd-reset-word", m, 2LL * m * m - 2LL * m + 2, static_cast<std::int64_t>(w.size()), to_q1,
                   "synchronizes A_{2m-1} to q1: " + yes_no(to_q1));
    r.witness = w;
    return r;
}

ClaimResult check_thm_ext_easy(int m) {
    const auto found = qu_extension(m);
    const Dfa dfa = a_odd(m);
    const StateSet qu = named_subset({FamilyName::AOdd, m}, SubsetName::QU);
    const Word greedy = greedy_qu_word(m);
    const bool greedy_ok = preimage_word(dfa, qu, greedy).size() > qu.size() &&
                           static_cast<int>(greedy.size()) == greedy_qu_length(m);
    auto r = bracket("qu-extension-bracket", m, Bound{ext_easy_lower(m), greedy_qu_length(m)}, length_or_minus_one(found),
                     found.has_value() && greedy_ok,
                     "finite evidence; greedy word extends Q_U with closed-form length: " + yes_no(greedy_ok));
    r.witness = found;
    return r;
}

ClaimResult check_ext_hard_growth(int m) {
    if (m < 5) throw PreconditionError("growth check needs m >= 5");
    const auto current = length_or_minus_one(qu_extension(m));
    const auto previous = length_or_minus_one(qu_extension(m - 1));
    const auto m2 = static_cast<std::int64_t>(m) * m;
    // 0.4 m^2 <= L <= 1.1 m^2, in integers
    const std::int64_t lower = std::max<std::int64_t>((4 * m2 + 9) / 10, previous + 1);
    const std::int64_t upper = (11 * m2) / 10;
    return bracket("qu-extension-growth", m, Bound{lower, upper}, current, current >= 0,
                   "finite evidence; L(m-1) = " + std::to_string(previous));
}

ClaimResult check_conservative(int m) {
    const Dfa dfa = conservative(m);
    const StateSet s = StateSet::label_range(m + 1, 2 * m - 1);
    const StateSet t = StateSet::label_range(m + 1, 2 * m);
    const bool a_extends = preimage(dfa, s, 0) == t;
    const bool a_fixes = preimage(dfa, t, 0) == t;
    const bool b_collapses = preimage(dfa, t, 1) == StateSet::from_labels({m});
    const auto found = conservative_extension(m);
    const auto length = length_or_minus_one(found);
    const auto previous = length_or_minus_one(conservative_extension(m - 1));
    // L(m)/(2m) > L(m-1)/(2m-2)  <=>  L(m) > L(m-1)·m/(m-1)
    const std::int64_t lower = previous * m / (m - 1) + 1;
    auto r = bracket("conservative", m, Bound{lower, std::nullopt}, length,
                     a_extends && a_fixes && b_collapses && found.has_value(),
                     "finite evidence; S a^-1 = T: " + yes_no(a_extends) + "; T a^-1 = T: " + yes_no(a_fixes) +
                         "; T b^-1 = {q_m}: " + yes_no(b_collapses) + "; L(m-1) = " + std::to_string(previous));
    r.witness = found;
    return r;
}

ClaimResult check_prop_b_series(int m) {
    const Dfa dfa = b_series(m);
    const bool structure = is_strongly_connected(dfa) && is_synchronizing(dfa);
    const auto found = shortest_extending_word(dfa, StateSet::from_labels({m - 3, m - 2}));
    auto r = exact("b-series-extension", m, 3LL * m - 1, length_or_minus_one(found), structure,
                   "strongly connected and synchronizing: " + yes_no(structure));
    r.witness = found;
    return r;
}

ClaimResult check_avoid(int m) {
    const Dfa dfa = b_series(m);
    const auto found = shortest_avoiding_word(dfa, static_cast<State>(2 * m - 1));
    auto r = exact("b-series-avoid", m, 2LL * m + 2, length_or_minus_one(found), true, "avoids q_{2m}");
    r.witness = found;
    return r;
}

ClaimResult check_thm5(int n) {
    return check_m_family("m-series-reset", n, m_series(n), thm5_word(n), static_cast<std::int64_t>(n) * n - 3LL * n + 3,
                          true);
}

ClaimResult check_thm5_prime(int n) {
    return check_m_family("m-prime-reset", n, m_prime_series(n), thm5_prime_word(n),
                          static_cast<std::int64_t>(n) * n - 3LL * n + 2, false);
}

ClaimResult check_cerny(int n) {
    const auto length = reset_length(cerny(n));
    return exact("cerny", n, static_cast<std::int64_t>(n - 1) * (n - 1),
                 length ? static_cast<std::int64_t>(*length) : -1, true, "both methods agree");
}

ClaimResult check_image_extension(int m) {
    const auto report = image_extension_bound(b_series(m));
    auto r = bracket("image-extension", m, Bound{3LL * m - 1, std::nullopt},
                     static_cast<std::int64_t>(report.worst_length), true,
                     "finite evidence; worst S = " + report.worst_s.to_string() + ", constant " +
                         std::to_string(report.constant_witness.num) + "/" +
                         std::to_string(report.constant_witness.den) + ", final preimage " +
                         report.worst_preimage.to_string() +
                         (report.preimage_is_image ? " is a reachable image" : " contains the reachable image " +
                                                                                  report.worst_target.to_string()));
    r.witness = report.worst_word;
    return r;
}

std::vector<ClaimResult> run_suite(const SuiteOptions& options) {
    std::vector<ClaimResult> out;
    for (int m = 3; m <= options.max_m; ++m) out.push_back(check_prop1(m));
    for (int m = 4; m <= std::min(options.max_m, 8); ++m) out.push_back(check_thm_ext_easy(m));
    for (int m = 5; m <= std::min(options.max_m, 8); ++m) out.push_back(check_ext_hard_growth(m));
    for (int m = 4; m <= std::min(options.max_m, 7); ++m) out.push_back(check_conservative(m));
    for (int m = 4; m <= options.max_m; ++m) out.push_back(check_prop_b_series(m));
    for (int m = 4; m <= options.max_m; ++m) out.push_back(check_avoid(m));
    for (int m = 4; m <= std::min(options.max_m, 6); ++m) out.push_back(check_image_extension(m));
    for (int n = 3; n <= std::min(options.max_n, 12); ++n) out.push_back(check_thm5(n));
    for (int n = 3; n <= std::min(options.max_n, 12); ++n) out.push_back(check_thm5_prime(n));
    for (int n = 3; n <= std::min(options.max_n, 7); ++n) out.push_back(check_cerny(n));
    return out;
}

}  // namespace syncx
