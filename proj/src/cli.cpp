#include "syncx/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "syncx/errors.hpp"
#include "syncx/extension.hpp"
#include "syncx/families.hpp"
#include "syncx/io.hpp"
#include "syncx/replication.hpp"
#include "syncx/reset.hpp"

namespace syncx::cli {
namespace {

/// "6,7,8,9" -> {q6,q7,q8,q9}, checked against n.
StateSet parse_subset(const std::string& text, std::size_t n) {
    std::vector<int> labels;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int label = 0;
        try {
            label = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw ConstructionError("bad state index '" + item + "'");
        }
        if (used != item.size() || label < 1 || static_cast<std::size_t>(label) > n) {
            throw ConstructionError("state index '" + item + "' not in [1.." + std::to_string(n) + "]");
        }
        labels.push_back(label);
    }
    if (labels.empty()) throw ConstructionError("empty state list");
    return StateSet::from_labels(labels);
}

std::string show_word(const Word& w, const std::string& alphabet) {
    return w.empty() ? std::string("(empty word)") : w.str(alphabet);
}

std::string show_length(const std::optional<std::size_t>& v) {
    return v ? std::to_string(*v) : std::string("none");
}

struct Loaded {
    DfaDocument doc;
    Dfa dfa;
};

Loaded load(const std::string& path) {
    DfaDocument doc = load_document(path);
    Dfa dfa = to_dfa(doc);
    return {std::move(doc), std::move(dfa)};
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw ConstructionError("cannot write " + path);
    file << text;
}

int cmd_gen(const std::string& family, int size, const std::string& format, const std::string& output,
            std::ostream& out) {
    const auto name = parse_family(family);
    if (!name) throw ConstructionError("unknown family '" + family + "'");
    const DfaDocument doc = to_document(make_family({*name, size}));
    std::string text;
    if (format == "json") {
        text = to_json(doc);
    } else if (format == "text") {
        text = to_text(doc);
    } else {
        text = to_dot(doc);
    }
    write_output(text, output, out);
    return kExitOk;
}

int cmd_analyze(const std::string& path, std::optional<std::size_t> limit, std::ostream& out) {
    const auto [doc, dfa] = load(path);
    const bool sync = is_synchronizing(dfa);
    out << "states: " << dfa.n() << "\n";
    out << "letters: " << doc.alphabet << "\n";
    out << "strongly connected: " << (is_strongly_connected(dfa) ? "yes" : "no") << "\n";
    out << "synchronizing: " << (sync ? "yes" : "no") << "\n";

    const auto word = shortest_reset_word(dfa);
    const auto trace = limit ? inverse_layers(dfa, *limit) : inverse_layers(dfa);
    out << "reset length (forward BFS): " << show_length(word ? std::optional(word->size()) : std::nullopt) << "\n";
    out << "reset length (inverse layers): " << show_length(trace.found_at) << (trace.truncated ? " (truncated)" : "")
        << "\n";
    if (word) out << "reset word: " << show_word(*word, doc.alphabet) << "\n";
    if (sync) out << "irreducibly synchronizing: " << (is_irreducibly_synchronizing(dfa) ? "yes" : "no") << "\n";
    if (!trace.truncated && (word ? std::optional(word->size()) : std::nullopt) != trace.found_at) {
        throw ConsistencyFault("forward BFS and inverse layers disagree");
    }
    return kExitOk;
}

int cmd_extend(const std::string& path, const std::string& set, std::ostream& out) {
    const auto [doc, dfa] = load(path);
    const StateSet s = parse_subset(set, dfa.n());
    const auto word = shortest_extending_word(dfa, s);
    out << "subset: " << s.to_string() << "\n";
    if (!word) {
        out << "not extendable\n";
        return kExitOk;
    }
    out << "length: " << word->size() << "\n";
    out << "word: " << show_word(*word, doc.alphabet) << "\n";
    out << "preimage: " << preimage_word(dfa, s, *word).to_string() << "\n";
    return kExitOk;
}

int cmd_profile(const std::string& path, std::size_t bound, std::ostream& out) {
    const auto [doc, dfa] = load(path);
    const auto report = extension_profile(dfa, bound);
    if (report.max_length) {
        out << "max length: " << *report.max_length << "\n";
        out << "witness set: " << report.witness_set.to_string() << "\n";
        out << "witness word: " << show_word(report.witness_word, doc.alphabet) << "\n";
    } else {
        out << "max length: unbounded\n";
        out << "unextendable set: " << report.witness_set.to_string() << "\n";
    }
    for (std::size_t j = 0; j < report.per_cardinality_max.size(); ++j) {
        out << "  |S| = " << (j + 1) << ": " << show_length(report.per_cardinality_max[j]) << "\n";
    }
    return kExitOk;
}

int cmd_avoid(const std::string& path, int state, std::ostream& out) {
    const auto [doc, dfa] = load(path);
    if (state < 1 || static_cast<std::size_t>(state) > dfa.n()) {
        throw ConstructionError("state " + std::to_string(state) + " not in [1.." + std::to_string(dfa.n()) + "]");
    }
    const auto word = shortest_avoiding_word(dfa, static_cast<State>(state - 1));
    if (!word) {
        out << "q" << state << " lies in every image\n";
        return kExitOk;
    }
    out << "length: " << word->size() << "\n";
    out << "word: " << show_word(*word, doc.alphabet) << "\n";
    out << "image: " << image(dfa, dfa.states(), *word).to_string() << "\n";
    return kExitOk;
}

int cmd_images(const std::string& path, std::ostream& out) {
    const auto [doc, dfa] = load(path);
    auto images = reachable_images(dfa);
    std::sort(images.begin(), images.end(), [](StateSet x, StateSet y) {
        return x.size() != y.size() ? x.size() > y.size() : x.labels() < y.labels();
    });
    out << "reachable images: " << images.size() << "\n";
    for (StateSet s : images) out << s.to_string() << "\n";
    return kExitOk;
}

int cmd_conjecture(const std::string& path, std::size_t bound, std::ostream& out) {
    const auto [doc, dfa] = load(path);
    const auto r = image_extension_bound(dfa, bound);
    out << "reachable images: " << r.reachable_image_count << "\n";
    out << "worst image: " << r.worst_s.to_string() << "\n";
    out << "worst length: " << r.worst_length << "\n";
    out << "constant: " << r.constant_witness.num << "/" << r.constant_witness.den << "\n";
    out << "word: " << show_word(r.worst_word, doc.alphabet) << "\n";
    out << "preimage: " << r.worst_preimage.to_string() << (r.preimage_is_image ? " (reachable image)" : "") << "\n";
    out << "larger image inside: " << r.worst_target.to_string() << "\n";
    return kExitOk;
}

int cmd_layers(const std::string& path, bool dump, std::optional<std::size_t> limit, std::ostream& out) {
    const auto [doc, dfa] = load(path);
    const auto trace = limit ? inverse_layers(dfa, *limit) : inverse_layers(dfa);
    out << "layers computed: " << trace.layers.size() << "\n";
    out << "Q first appears at: " << show_length(trace.found_at) << "\n";
    if (trace.truncated) out << "truncated at the iteration limit\n";
    if (dump) {
        for (std::size_t i = 0; i < trace.layers.size(); ++i) {
            out << "L" << i << ":";
            for (StateSet s : trace.layers[i]) out << ' ' << s.to_string();
            out << "\n";
        }
    }
    return kExitOk;
}

std::string show_expected(const ClaimResult& c) {
    if (const auto* v = std::get_if<std::int64_t>(&c.expected)) return std::to_string(*v);
    const auto& b = std::get<Bound>(c.expected);
    return "[" + std::to_string(b.lower) + ", " + (b.upper ? std::to_string(*b.upper) : std::string("inf")) + "]";
}

int cmd_verify(int max_m, int max_n, const std::string& json_path, std::ostream& out) {
    const auto claims = run_suite({max_m, max_n});
    bool all_ok = true;
    for (const auto& c : claims) {
        all_ok = all_ok && c.ok();
        out << status_id(c.status) << "  " << c.claim_id << "(" << c.parameter << ")  expected " << show_expected(c)
            << "  computed " << c.computed;
        if (!c.note.empty()) out << "  [" << c.note << "]";
        out << "\n";
    }
    out << claims.size() << " claims, " << (all_ok ? "all ok" : "FAILURES") << "\n";
    if (!json_path.empty()) write_output(claims_to_json(claims), json_path, out);
    return all_ok ? kExitOk : kExitClaimFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Synchronizing automata: extremal families and exact synchronization quantities", "syncx"};
    app.require_subcommand(1);

    std::string input;
    std::optional<std::size_t> layer_limit;
    std::size_t bound = kDefaultProfileBound;

    auto* gen = app.add_subcommand("gen", "Generate a family member");
    std::string family;
    int size = 0;
    std::string format = "json";
    std::string output;
    gen->add_option("--family", family, "a-odd, a-even, conservative, b-series, m (m-series), m-prime, cerny")
        ->required();
    gen->add_option("--size", size, "m for the 2m-state families, n otherwise")->required();
    gen->add_option("--format", format)->check(CLI::IsMember({"json", "text", "dot"}));
    gen->add_option("-o,--output", output, "Write to a file instead of stdout");

    auto* analyze = app.add_subcommand("analyze", "Reset length, synchronization, connectivity, irreducibility");
    analyze->add_option("input", input, "Automaton file (JSON or text)")->required();
    analyze->add_option("--limit", layer_limit, "Inverse-layer iteration limit");

    auto* extend = app.add_subcommand("extend", "Shortest extending word of a subset");
    std::string set;
    extend->add_option("input", input)->required();
    extend->add_option("--set", set, "Comma-separated 1-based states")->required();

    auto* profile = app.add_subcommand("profile", "Extension profile over all subsets");
    profile->add_option("input", input)->required();
    profile->add_option("--limit", bound, "Largest number of states accepted");

    auto* avoid = app.add_subcommand("avoid", "Shortest word whose image avoids a state");
    int state = 0;
    avoid->add_option("input", input)->required();
    avoid->add_option("--state", state, "1-based state")->required();

    auto* images = app.add_subcommand("images", "All reachable images of Q");
    images->add_option("input", input)->required();

    auto* conjecture = app.add_subcommand("conjecture", "Image-extension bound");
    conjecture->add_option("input", input)->required();
    conjecture->add_option("--limit", bound, "Largest number of states accepted");

    auto* layers = app.add_subcommand("layers", "Inverse-BFS layer families");
    bool dump = false;
    layers->add_option("input", input)->required();
    layers->add_flag("--trace", dump, "Print every layer");
    layers->add_option("--limit", layer_limit, "Iteration limit");

    auto* verify = app.add_subcommand("verify-paper", "Run every quantitative check");
    int max_m = 8;
    int max_n = 10;
    std::string json_path;
    verify->add_option("--max-m", max_m, "Largest m for the 2m-state families")->check(CLI::Range(3, 12));
    verify->add_option("--max-n", max_n, "Largest n for M_n, M'_n and C_n")->check(CLI::Range(3, 16));
    verify->add_option("--json", json_path, "Write the claim report as JSON");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(family, size, format, output, out);
        if (analyze->parsed()) return cmd_analyze(input, layer_limit, out);
        if (extend->parsed()) return cmd_extend(input, set, out);
        if (profile->parsed()) return cmd_profile(input, bound, out);
        if (avoid->parsed()) return cmd_avoid(input, state, out);
        if (images->parsed()) return cmd_images(input, out);
        if (conjecture->parsed()) return cmd_conjecture(input, bound, out);
        if (layers->parsed()) return cmd_layers(input, dump, layer_limit, out);
        if (verify->parsed()) return cmd_verify(max_m, max_n, json_path, out);
    } catch (const ConsistencyFault& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitClaimFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace syncx::cli
