#ifndef LEGPROJ_CLI_HPP
#define LEGPROJ_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "legproj/bound_checker.hpp"

namespace legproj {

enum class Command { VerifyIdentities, VerifyBounds, EmitPoly, SweepGrowth };

/// Which TRACE_MAIN / TRACE_COROLLARY factor gates verify-bounds.
enum class MainFactor { Stated, AsProved };

struct RunConfig {
    Command command = Command::VerifyIdentities;
    long p_min = -1;  // command default when negative
    long p_max = -1;
    long nu_min = 0;
    long nu_max = -1;
    long n_max = 5;
    long s_max = -1;  // no cap unless s_max_given
    bool s_max_given = false;
    std::vector<std::string> functions;
    std::vector<BoundKind> kinds;
    std::string out;  // stdout when empty
    int quad_order = 0;
    std::uint64_t seed = 20240611;
    MainFactor gate = MainFactor::Stated;
    bool inject_fault = false;
    // emit-poly
    std::string family;
    long p = -1, nu = -1, i = -1, n = -1;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses, validates and runs one command. Results go to `cfg.out` (or
/// `out`), diagnostics to `err`; the return value is the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Entry points taking an already validated configuration.
int cmd_verify_identities(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_emit_poly(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep_growth(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace legproj

#endif // LEGPROJ_CLI_HPP
