#pragma once

// Verification suites behind `sbg verify`. Each suite returns one report per check
// family; the bound argument replaces the suite's main sweep bound.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sbgroups/pgl3_checker.hpp"

namespace sbg::cli {

inline constexpr std::uint64_t kSemidirectBound = 5000;
inline constexpr std::uint64_t kAlgebraBound = 40;
inline constexpr std::uint64_t kPgl3Bound = 10'000;

std::vector<pgl3::Report> semidirect_suite(std::uint64_t bound);
std::vector<pgl3::Report> algebra_suite(std::uint64_t bound);
std::vector<pgl3::Report> pgl3_suite(std::uint64_t bound);

/// name is one of semidirect, algebra, pgl3, all. Progress lines go to log when non-null.
/// Throws std::invalid_argument for an unknown name.
std::vector<pgl3::Report> run_suite(const std::string& name, std::optional<std::uint64_t> bound, std::ostream* log);

}  // namespace sbg::cli
