#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dolce/matrix.hpp"

namespace dolce {

/// Raised on malformed documents (bad JSON, schema violations, non-rational
/// coefficient strings). Maps to exit code 2 in the command line tool.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class InputMode { real, complex_coframe };

struct BracketEntry {
    int j = 0, k = 0;                      // 1-based, j < k
    std::map<int, Rational> coefficients;  // l (1-based) -> C^l_{jk}
};

enum class TermKind { holomorphic, mixed, antiholomorphic };  // (2,0), (1,1), (0,2)

struct CoframeTerm {
    TermKind kind = TermKind::mixed;
    int a = 0, b = 0;  // 1-based coframe indices
    Scalar coeff;
};

/// Parsed and schema-checked input document. Real mode carries structure
/// constants plus an optional J; complex mode carries the coframe
/// differentials d phi^i directly.
struct InputDocument {
    InputMode mode = InputMode::real;
    std::string name;
    int dimension = 0;  // 2m real generators, or m coframe elements
    std::vector<BracketEntry> brackets;
    std::optional<Mat> j;                        // real mode only
    std::vector<std::vector<CoframeTerm>> d_phi; // complex mode only, entry i-1 = d phi^i
    std::optional<Mat> metric;

    int real_dimension() const { return mode == InputMode::real ? dimension : 2 * dimension; }
};

/// Strict parse: unknown fields are rejected, every coefficient must be an
/// exact rational string. Throws parse_error with line/field context.
InputDocument parse_spec(const std::string& json_text);

/// Canonical serialization; parse(serialize(doc)) == doc.
std::string serialize(const InputDocument& doc);

bool operator==(const InputDocument& a, const InputDocument& b);

}  // namespace dolce
