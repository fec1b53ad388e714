#pragma once

#include <string>

#include "dolce/checks.hpp"
#include "dolce/cohomology.hpp"
#include "dolce/spectral.hpp"

namespace dolce {

enum class OutputFormat { text, json, csv };

/// Grid rows top-down (q = m first), matching the visual orientation with q
/// increasing upward and p rightward.
std::string render_grid_text(const Grid& grid);
std::string render_grid_csv(const Grid& grid);

std::string render_derham(const Model& model, OutputFormat format);
std::string render_dolbeault(const Model& model, OutputFormat format,
                             std::optional<std::pair<int, int>> bidegree);
std::string render_spectral(const Model& model, OutputFormat format, int page /* 0 = all */);
std::string render_jinv(const Model& model, OutputFormat format);
std::string render_harmonic(const Model& model, OutputFormat format,
                            std::optional<std::pair<int, int>> bidegree);
std::string render_checks(const CheckRun& run, const std::string& suite, OutputFormat format);
std::string render_validation(const ValidationReport& report, OutputFormat format);

}  // namespace dolce
