#pragma once

#include <string>

namespace csforge {

/// Replay the dimension-8 derivation end to end — partition sets, the kept
/// integration-by-parts identities, the assembled matrices, each partition's
/// normalization and contribution, and the verified potential — as a plain
/// text report.
std::string renderFixtureReport();

} // namespace csforge
