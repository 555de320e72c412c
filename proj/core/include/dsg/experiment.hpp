#pragma once

#include <set>
#include <string>
#include <vector>

#include "dsg/model.hpp"

namespace dsg {

enum class SectorChoice { Vacuum, Kink, Both };
enum class OutputKind { Profile, Energy, Correlations, EntropyScan, Spectrum };
enum class OutputFormat { Csv, Json };

// One reproducible experiment: which chain, which sectors, which series to
// emit and where.
struct ExperimentSpec {
    ModelParams params;
    SectorChoice sector = SectorChoice::Both;
    std::set<OutputKind> outputs = {OutputKind::Profile, OutputKind::Energy,
                                    OutputKind::Correlations,
                                    OutputKind::EntropyScan,
                                    OutputKind::Spectrum};
    int scan_stride = 1;
    std::vector<int> anchor_sites = {0};
    OutputFormat format = OutputFormat::Csv;
    std::string output_path = ".";

    void validate() const;
};

// Regime presets on the 501-point chain: substrate-dominant g = 1e4,
// balanced g = 1e5, elastic-dominant g = 1e6.
ExperimentSpec preset(const std::string& name, double a);

struct RunResult {
    std::vector<std::string> files;
};

/// Run the statics -> spectral -> gaussian pipeline per the spec and emit
/// one file per requested output. Output bytes are deterministic for a
/// given spec (fixed 12-significant-digit formatting). On failure, files
/// already written by this run are removed before the error propagates.
RunResult run(const ExperimentSpec& spec);

// Flat key=value config file mirroring the CLI flags; '#' starts a comment.
// Keys present in the file overwrite the corresponding spec fields; callers
// apply command-line overrides afterwards.
void apply_config_file(ExperimentSpec& spec, const std::string& path);

SectorChoice parse_sector_choice(const std::string& s);
OutputKind parse_output_kind(const std::string& s);
OutputFormat parse_output_format(const std::string& s);

}  // namespace dsg
