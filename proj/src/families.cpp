#include "syncx/families.hpp"

#include <array>
#include <functional>
#include <string>

#include "syncx/errors.hpp"

namespace syncx {
namespace {

using LabelMap = std::function<int(int)>;

// Tables are written with 1-based labels to stay close to the usual notation.
Dfa from_label_maps(int n, const std::vector<LabelMap>& letters) {
    std::vector<std::vector<int>> table;
    for (const auto& f : letters) {
        std::vector<int> row;
        for (int i = 1; i <= n; ++i) row.push_back(f(i));
        table.push_back(std::move(row));
    }
    return make_dfa(static_cast<std::size_t>(n), letters.size(), table);
}

void require_param(bool ok, std::string_view family, int param, std::string_view domain) {
    if (!ok) {
        throw ConstructionError(std::string(family) + ": parameter " + std::to_string(param) + " outside " +
                                std::string(domain));
    }
}

constexpr Letter kA = 0;
constexpr Letter kB = 1;
constexpr Letter kC = 2;

Word letters(std::initializer_list<Letter> ls) { return Word(std::vector<Letter>(ls)); }

constexpr std::array<std::pair<FamilyName, std::string_view>, 7> kFamilyIds{{
    {FamilyName::AOdd, "a-odd"},
    {FamilyName::AEven, "a-even"},
    {FamilyName::Conservative, "conservative"},
    {FamilyName::BSeries, "b-series"},
    {FamilyName::MSeries, "m-series"},
    {FamilyName::MPrime, "m-prime"},
    {FamilyName::Cerny, "cerny"},
}};

}  // namespace

std::string_view family_id(FamilyName name) {
    for (const auto& [family, id] : kFamilyIds) {
        if (family == name) return id;
    }
    return "unknown";
}

std::optional<FamilyName> parse_family(std::string_view id) {
    if (id == "m") return FamilyName::MSeries;
    for (const auto& [family, known] : kFamilyIds) {
        if (known == id) return family;
    }
    return std::nullopt;
}

Dfa make_family(FamilySpec spec) {
    switch (spec.name) {
        case FamilyName::AOdd: return a_odd(spec.param);
        case FamilyName::AEven: return a_even(spec.param);
        case FamilyName::Conservative: return conservative(spec.param);
        case FamilyName::BSeries: return b_series(spec.param);
        case FamilyName::MSeries: return m_series(spec.param);
        case FamilyName::MPrime: return m_prime_series(spec.param);
        case FamilyName::Cerny: return cerny(spec.param);
    }
    throw ConstructionError("unknown family");
}

Dfa a_odd(int m) {
    require_param(m >= 3, "a-odd", m, "m >= 3");
    const int n = 2 * m - 1;
    return from_label_maps(n, {
        [=](int i) { return i == m ? 1 : i == n ? m + 1 : i + 1; },
        [=](int i) { return i <= m - 1 ? i : i == m ? n : i == n ? m : i - m; },
    });
}

Dfa a_even(int m) {
    require_param(m >= 3, "a-even", m, "m >= 3");
    const int n = 2 * m;
    return from_label_maps(n, {
        [=](int i) { return i == m ? 1 : i == n ? m + 1 : i + 1; },
        [=](int i) { return i <= m - 1 ? i : i == m ? n : (i == n || i == n - 1) ? m : i - m; },
    });
}

Dfa conservative(int m) {
    require_param(m >= 3, "conservative", m, "m >= 3");
    const int n = 2 * m;
    return from_label_maps(n, {
        [=](int i) { return i == m ? 1 : (i == n - 1 || i == n) ? m + 1 : i + 1; },
        [=](int i) { return i <= m - 1 ? i : i == m ? n : i == n ? m : i == n - 1 ? m - 1 : i - m; },
    });
}

Dfa b_series(int m) {
    require_param(m >= 4, "b-series", m, "m >= 4");
    const int n = 2 * m;
    return from_label_maps(n, {
        [=](int i) { return i == m ? 1 : i == n - 1 ? m + 1 : i == n ? n : i + 1; },
        [=](int i) {
            if (i <= m - 2 || (i >= m + 1 && i <= n - 3)) return i;
            if (i == m - 1) return n - 2;
            if (i == n - 2) return m - 1;
            if (i == m) return n;
            if (i == n - 1) return n;
            return n - 1;  // q_{2m}
        },
    });
}

Dfa m_series(int n) {
    require_param(n >= 3, "m-series", n, "n >= 3");
    return from_label_maps(n, {
        [=](int i) { return i == n ? 2 : i + 1; },
        [=](int i) { return i == 1 ? 2 : i; },
        [=](int i) { return i == 1 ? n : i == n ? 1 : i; },
    });
}

Dfa m_prime_series(int n) {
    require_param(n >= 3, "m-prime", n, "n >= 3");
    return from_label_maps(n, {
        [=](int i) { return i == n ? 2 : i + 1; },
        [=](int i) { return i == 1 ? 2 : i; },
        [=](int i) { return i == n ? 1 : i; },
    });
}

Dfa cerny(int n) {
    require_param(n >= 2, "cerny", n, "n >= 2");
    return from_label_maps(n, {
        [=](int i) { return i == n ? 1 : i + 1; },
        [=](int i) { return i == 1 ? 2 : i; },
    });
}

StateSet named_subset(FamilySpec family, SubsetName name) {
    const int m = family.param;
    int upper_last = 0;
    if (family.name == FamilyName::AOdd) {
        upper_last = 2 * m - 1;
    } else if (family.name == FamilyName::AEven) {
        upper_last = 2 * m;
    } else {
        throw PreconditionError("Q_U / Q_D are only defined for a-odd and a-even");
    }
    if (m < 3) throw PreconditionError("family parameter must be at least 3");
    return name == SubsetName::QU ? StateSet::label_range(m + 1, upper_last) : StateSet::label_range(1, m);
}

bool is_covered(const Dfa& dfa, StateSet s, State q) {
    if (dfa.n() % 2 == 0 || dfa.k() < 2) throw PreconditionError("is_covered expects an A_{2m-1} automaton");
    const auto m = static_cast<State>((dfa.n() + 1) / 2);
    // Q_U holds 0-based indices m .. 2m-2.
    if (q < m || q >= dfa.n() || !s.contains(q)) throw PreconditionError("q must lie in S ∩ Q_U");
    return s.contains(dfa.next(q, kB));
}

Word prop1_word(int m) {
    require_param(m >= 3, "prop1_word", m, "m >= 3");
    const auto um = static_cast<std::size_t>(m);
    const Word a_m = Word::repeat(kA, um);
    const Word b = letters({kB});
    const Word block = Word::repeat(kA, um - 1) + b + a_m + b;
    return letters({kB, kA, kB}) + a_m + b + block.power(um - 2);
}

Word thm5_word(int n) {
    require_param(n >= 3, "thm5_word", n, "n >= 3");
    const auto un = static_cast<std::size_t>(n);
    const Word block = Word::repeat(kA, un - 2) + letters({kC, kB});
    return letters({kA, kC, kB}) + block.power(un - 3);
}

Word thm5_prime_word(int n) {
    require_param(n >= 3, "thm5_prime_word", n, "n >= 3");
    const auto un = static_cast<std::size_t>(n);
    const Word block = Word::repeat(kA, un - 2) + letters({kC, kB});
    return letters({kC, kB}) + block.power(un - 3);
}

Word greedy_seed_word(int m) {
    require_param(m >= 3, "greedy_seed_word", m, "m >= 3");
    const auto um = static_cast<std::size_t>(m);
    return letters({kB}) + Word::repeat(kA, 2 * um - 3) + letters({kB, kA, kA});
}

Word greedy_qu_word(int m) {
    require_param(m >= 4, "greedy_qu_word", m, "m >= 4");
    const auto um = static_cast<std::size_t>(m);
    const Dfa dfa = a_odd(m);
    const StateSet qu = named_subset({FamilyName::AOdd, m}, SubsetName::QU);
    const Word b = letters({kB});
    const Word step = b + Word::repeat(kA, 2 * um - 1);
    const Word tail = greedy_seed_word(m) + b;

    // d counts the lower states collected; d = m + 1 is more than b^{-1} can ever need.
    std::optional<Word> best;
    for (std::size_t d = 2; d <= um + 1; ++d) {
        const Word middle = step.power(d - 2) + tail;
        for (std::size_t t = 0; t <= 2 * um - 1; ++t) {
            Word candidate = b + Word::repeat(kA, t) + middle;
            if (best && candidate.size() >= best->size()) continue;
            if (preimage_word(dfa, qu, candidate).size() > qu.size()) best = std::move(candidate);
        }
    }
    if (!best) throw ConstructionError("no greedy candidate extends Q_U for m = " + std::to_string(m));
    return *best;
}

int greedy_qu_length(int m) { return m % 2 == 0 ? m * m - 3 * m / 2 + 4 : m * m - m + 2; }

}  // namespace syncx
