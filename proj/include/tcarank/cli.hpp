#ifndef TCARANK_CLI_HPP
#define TCARANK_CLI_HPP

#include <cstdint>
#include <ostream>
#include <string>

#include "tcarank/mixture.hpp"
#include "tcarank/report.hpp"

namespace tcarank {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int io_error = 2;
inline constexpr int parse_error = 3;
inline constexpr int not_homogeneous = 4;
} // namespace exit_code

struct InputSpec {
    enum class Format { Orderings, Ranks };
    std::string path;
    Format format = Format::Orderings;
    int top_k = 0; // 0 = keep complete rankings
};

// Loads, parses and (when top_k > 0) collapses a rank data file.
RankDataset load_dataset(const InputSpec& input);

struct AnalyzeOptions {
    InputSpec input;
    PeelConfig peel;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
};

// Full pipeline: peel, write report.json / assignments.csv / per-group
// score CSVs and biplot SVGs under out_dir, print the group summaries.
int cmd_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err);

// Homogeneity summary of the whole dataset; exit 4 with the V1 pattern
// labels when the data is not globally homogeneous.
int cmd_ghc(const InputSpec& input, const TsvdOptions& tsvd, std::ostream& out, std::ostream& err);

// Dispersions and factor scores of the nega-coded table, no peeling.
int cmd_decompose(const InputSpec& input, int k, const TsvdOptions& tsvd,
                  const std::string& out_dir, std::ostream& out, std::ostream& err);

} // namespace tcarank

#endif
