#pragma once

#include <filesystem>
#include <istream>

#include "fracopt/sharpe.hpp"

namespace fracopt {

enum class ReturnsUnit { Decimal, Percent };

/// Whether the first CSV column holds period labels. Auto treats it as a
/// label column when the first data row's first cell is not a number.
enum class LabelColumn { Auto, Present, Absent };

/// Parses a header row of asset labels followed by numeric rows. Percent
/// input is divided by 100. Blank lines are skipped.
///
/// Errors: ragged rows and non-numeric (or NaN) cells raise ParseError with
/// the 1-based line and column; fewer than 2 data rows raise InsufficientData.
ReturnsMatrix parse_returns_csv(std::istream& in, ReturnsUnit unit,
                                LabelColumn labels = LabelColumn::Auto);

/// File wrapper around parse_returns_csv. A missing file is a ParseError.
ReturnsMatrix load_returns_csv(const std::filesystem::path& path, ReturnsUnit unit,
                               LabelColumn labels = LabelColumn::Auto);

}  // namespace fracopt
