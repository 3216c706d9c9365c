#ifndef SYMPOW_COMMANDS_HPP
#define SYMPOW_COMMANDS_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sympow/datasets.hpp"

namespace sympow::cli {

enum Exit : int { ok = 0, failure = 1, usage = 2 };

struct DatasetChoice {
    std::optional<int> n;
    std::string name;         ///< --dataset
    std::string config_path;  ///< --config
    std::optional<FieldMode> mode;
};

/// Resolution order: --config, --dataset, --n. Throws DatasetError.
Dataset resolve_dataset(const DatasetChoice& choice);

enum class Expectation { non_containment, containment, none };

/// Containment I^(m) in I^r is a theorem when m >= 2r; the listed
/// counterexamples are expected to fail it.
Expectation expected_verdict(const std::string& dataset, unsigned m, unsigned r);
std::string to_string(Expectation e);

struct VerifyOptions {
    DatasetChoice data;
    unsigned m = 3;
    unsigned r = 2;
    std::optional<unsigned> max_degree;
    std::string emit_cert;
    bool json = false;
};

struct HilbertOptions {
    DatasetChoice data;
    unsigned m = 1;
    std::optional<unsigned> max_degree;
    bool json = false;
};

struct ScanOptions {
    std::vector<int> ns;
    std::optional<FieldMode> mode;
    unsigned m = 3;
    unsigned r = 2;
    bool json = false;
};

struct RenderCommandOptions {
    DatasetChoice data;
    std::string svg;  ///< empty: write to stdout
    bool show_ordinary = false;
};

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_certificate(const std::string& path, bool json, std::ostream& out, std::ostream& err);
int cmd_render(const RenderCommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_hilbert(const HilbertOptions& opts, std::ostream& out, std::ostream& err);
int cmd_scan(const ScanOptions& opts, std::ostream& out, std::ostream& err);
int cmd_config_build(const DatasetChoice& data, std::ostream& out, std::ostream& err);
int cmd_config_triples(const DatasetChoice& data, bool json, std::ostream& out, std::ostream& err);

}  // namespace sympow::cli

#endif  // SYMPOW_COMMANDS_HPP
