#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "spinent/config.hpp"
#include "spinent/ensemble.hpp"
#include "spinent/spectral.hpp"
#include "spinent/two_qubit.hpp"

namespace spinent {

inline constexpr char kSweepCsv[] = "sweep.csv";
inline constexpr char kSweepRawCsv[] = "sweep_raw.csv";
inline constexpr char kFig1Csv[] = "fig1.csv";
inline constexpr char kSpectrumCsv[] = "spectrum.csv";
inline constexpr char kMetadata[] = "metadata.txt";

std::string code_version();

/// Shortest round-trip decimal text for a double (17 significant digits).
std::string format_real(double value);

/// Create `dir` if needed and prove it is writable. Throws IoError.
void prepare_output_dir(const std::filesystem::path& dir);

/// Write `content` to `path` through a temporary file renamed on success.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

std::string sweep_csv(const EnsembleResult& result);
std::string sweep_raw_csv(const EnsembleResult& result);
std::string fig1_csv(const std::vector<SameSplittingRow>& rows);
std::string spectrum_csv(const SpectralDecomposition& spectrum);

/// Run metadata; the `timestamp` line is the only field that varies between
/// identical runs.
std::string metadata_text(const RunConfig& config, const std::string& timestamp,
                          const std::vector<std::string>& extra_lines = {});

void write_sweep_results(const EnsembleResult& result, const RunConfig& config, const std::string& timestamp);
void write_fig1_results(const std::vector<SameSplittingRow>& rows, const RunConfig& config,
                        const std::string& timestamp);
void write_spectrum_results(const SpectralDecomposition& spectrum, double eta_value, const RunConfig& config,
                            const std::string& timestamp);

/// Labeled text block for the two-qubit solution.
std::string two_qubit_text(const TwoQubitAnalytic& solution);
/// Single-line JSON record of the same fields.
std::string two_qubit_json(const TwoQubitAnalytic& solution);

std::string utc_timestamp();

}  // namespace spinent
