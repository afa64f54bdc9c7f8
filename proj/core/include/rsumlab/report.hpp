#pragma once

// Text, JSON and CSV renderings of verification results. Output is a pure
// function of its inputs; elapsed time appears only when `timing` is set.

#include <string>
#include <vector>

#include "rsumlab/verify.hpp"

namespace rsumlab {

enum class OutputFormat { Text, Json, Csv };

std::optional<OutputFormat> parse_output_format(std::string_view name);

std::string render_summary(const VerificationSummary& s, const VerifyOptions& opt, OutputFormat fmt,
                           bool timing = false);

/// Witness list from search_witnesses.
std::string render_witnesses(const GroupSpec& g, BoundKind kind, SearchMode mode,
                             const std::vector<BoundReport>& rows, OutputFormat fmt);

/// One CSV field, quoted when it holds a comma, quote or newline.
std::string csv_field(std::string_view v);

}  // namespace rsumlab
