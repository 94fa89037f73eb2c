#pragma once

namespace wof::cli {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

// Parses argv and runs one verb. Exit codes: 0 ok, 1 domain error or failed check, 2 usage error.
int run(int argc, char** argv);

}  // namespace wof::cli
