#pragma once

#include "weingarten/radial_solution.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace weingarten {

/// Writes `content` to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// CSV with header `r,u,du`, one node per line, shortest round-trip decimals.
[[nodiscard]] std::string profile_to_csv(const RadialSolution& sol);
void write_profile_csv(const RadialSolution& sol, const std::filesystem::path& path);

/// Parses the CSV written above. The profile gets `params` and `phi`; its
/// provenance is FixedPoint when the first row is (0, 0, 0), Continued when it
/// starts elsewhere on the axis, and ClosedForm otherwise.
/// Throws ParseError on malformed content and IoError when unreadable.
[[nodiscard]] RadialSolution profile_from_csv(std::string_view text, const WeingartenParams& params,
                                              const Phi& phi);
[[nodiscard]] RadialSolution read_profile_csv(const std::filesystem::path& path, const WeingartenParams& params,
                                              const Phi& phi);

} // namespace weingarten
