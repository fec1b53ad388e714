#pragma once

#include "dolce/input.hpp"
#include "dolce/spectral.hpp"

namespace dolce {

/// Regression expectations attached to a corpus entry; only the pinned
/// fields are checked (negative / empty means "not pinned").
struct ExpectedResults {
    std::vector<int> betti;
    int euler = 0;
    bool euler_pinned = false;
    std::map<int, Grid> pages;        // page index -> dimension grid
    int degeneration_stage = -1;
    int h_plus = -1, h_minus = -1;
    std::optional<bool> c_pure, c_full;
    std::optional<bool> condition_star;             // E^{0,1}_1 == E^{0,1}_2
    std::optional<std::pair<int, int>> e01_dims;    // (dim E^{0,1}_1, dim E^{0,1}_2)
    std::optional<bool> unimodular;
    std::optional<bool> integrable;
};

struct CorpusEntry {
    std::string key;
    InputDocument document;
    ExpectedResults expected;
};

/// The built-in example corpus.
const std::vector<CorpusEntry>& corpus();

/// Lookup by key (the bare "G-alpha-112" aliases structure (A)).
const CorpusEntry* corpus_find(const std::string& key);

/// Helper shared by corpus construction and tests: grid from rows listed
/// top to bottom (q = m down to 0), each row p = 0..m.
Grid grid_rows(int m, const std::vector<std::vector<int>>& rows_top_down);

}  // namespace dolce
