#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diomax/curves.hpp"
#include "diomax/intpoly.hpp"

namespace diomax::corpus {

using poly::Int;
using poly::IntPoly;

struct Entry {
    std::string name;
    std::uint64_t p = 0;
    unsigned n = 1;
    std::vector<ff::coeff_t> modulus; // empty: deterministic default
    std::optional<curves::CurveModel> model; // nullopt: declared data only
    unsigned declared_genus = 0;
    std::map<unsigned, Int> declared_counts;
    std::optional<IntPoly> declared_lpoly;
    std::string note;
};

std::vector<Entry> load_corpus(const std::string& path);

/// Parses a single entry from its JSON text (same schema as the corpus).
Entry parse_entry_text(const std::string& json_text);

struct VerifyResult {
    std::string name;
    bool pass = true;
    std::vector<std::string> diffs;    // mismatches / errors
    std::vector<std::string> skipped;  // out-of-budget or declared-only items
    std::vector<std::string> checks;   // passed checks, for the report
};

/// Recomputes counts (within budget), the defect, classification flags and
/// (when all g counts fit the budget) the full L-polynomial, comparing
/// everything against the declared data.
std::vector<VerifyResult> verify(const std::vector<Entry>& entries,
                                 const curves::Budget& budget = {});

} // namespace diomax::corpus
