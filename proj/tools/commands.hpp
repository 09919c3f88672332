#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tedhard::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerifyFail = 3;

struct SolveArgs {
  std::string instance;
  std::string alg = "dp";  // brute | dp | caterpillar
};

struct GenArgs {
  std::string family;  // apsp | clique
  std::string graph;
  std::string m = "auto";
  std::size_t k = 3;
  bool published_layout = false;
  std::string output;  // empty: stdout
};

struct VerifyArgs {
  std::string family;
  std::string graph;
  std::string m = "auto";
  std::size_t k = 3;
  bool slow = false;
};

struct BenchArgs {
  std::string family;  // caterpillar | random | apsp
  std::string sizes = "8..32";
  std::string algs = "dp";
  std::uint64_t seed = 1;
};

/// Each command writes its report to `out`, problems to `err`, and returns
/// an exit code. Exceptions from the library are reported, not propagated.
int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);
int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);

/// "a..b" doubles from a up to b; otherwise a comma list.
std::vector<std::size_t> parse_sizes(const std::string& spec);

}  // namespace tedhard::cli
