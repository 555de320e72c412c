#include "dsg/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dsg/gaussian.hpp"
#include "dsg/spectral.hpp"
#include "dsg/statics.hpp"

namespace fs = std::filesystem;

namespace dsg {

namespace {

// Shortest representation within 12 significant digits; reproducible bytes.
std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

double round_12sig(double v) {
    return std::strtod(format_number(v).c_str(), nullptr);
}

struct Series {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// Removes everything this run wrote if it does not reach commit().
class OutputTransaction {
public:
    ~OutputTransaction() {
        if (committed_) return;
        std::error_code ec;
        for (const auto& p : written_) fs::remove(p, ec);
    }
    void record(const fs::path& p) { written_.push_back(p); }
    std::vector<std::string> commit() {
        committed_ = true;
        std::vector<std::string> out;
        for (const auto& p : written_) out.push_back(p.string());
        return out;
    }

private:
    std::vector<fs::path> written_;
    bool committed_ = false;
};

void write_series(const fs::path& path, const Series& series,
                  OutputFormat format, OutputTransaction& tx) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open output file " + path.string());
    tx.record(path);
    if (format == OutputFormat::Csv) {
        for (size_t c = 0; c < series.columns.size(); ++c)
            out << (c ? "," : "") << series.columns[c];
        out << "\n";
        for (const auto& row : series.rows) {
            for (size_t c = 0; c < row.size(); ++c)
                out << (c ? "," : "") << format_number(row[c]);
            out << "\n";
        }
    } else {
        nlohmann::json j;
        j["columns"] = series.columns;
        auto& rows = j["rows"] = nlohmann::json::array();
        for (const auto& row : series.rows) {
            nlohmann::json r = nlohmann::json::array();
            for (double v : row) r.push_back(round_12sig(v));
            rows.push_back(std::move(r));
        }
        out << j.dump(2) << "\n";
    }
    if (!out.good()) throw IoError("failed writing " + path.string());
}

std::string sector_suffix(Sector s) {
    return s == Sector::Vacuum ? "vacuum" : "kink";
}

std::vector<int> scan_lengths(int n_sites, int stride) {
    std::vector<int> lengths;
    for (int l = 1; l <= n_sites; l += stride) lengths.push_back(l);
    return lengths;
}

// Everything the pipeline derives for one sector.
struct SectorData {
    FieldConfiguration config;
    NormalModes modes;
    CovarianceData cov;
};

SectorData compute_sector(const ModelParams& params, Sector sector) {
    SectorData data;
    data.config = sector == Sector::Kink ? solve_kink(params)
                                         : vacuum_configuration(params);
    data.modes = eigendecompose(build_hessian(data.config));
    data.cov = covariance(data.modes);
    return data;
}

}  // namespace

void ExperimentSpec::validate() const {
    params.validate();
    if (scan_stride < 1) throw DomainError("scan stride must be >= 1");
    for (int a : anchor_sites)
        if (a < 0 || a > params.last_site())
            throw DomainError("anchor site out of range");
    if (outputs.empty()) throw DomainError("no outputs requested");
}

ExperimentSpec preset(const std::string& name, double a) {
    ExperimentSpec spec;
    if (name == "subsreg")
        spec.params.g = 1e4;
    else if (name == "balreg")
        spec.params.g = 1e5;
    else if (name == "elasreg")
        spec.params.g = 1e6;
    else
        throw DomainError("unknown preset '" + name +
                          "' (expected subsreg, balreg or elasreg)");
    spec.params.n_sites = 501;
    spec.params.a = a;
    spec.params.validate();
    return spec;
}

RunResult run(const ExperimentSpec& spec) {
    spec.validate();
    const fs::path dir(spec.output_path);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (!fs::is_directory(dir))
        throw IoError("output path is not a directory: " + dir.string());
    const std::string ext = spec.format == OutputFormat::Csv ? ".csv" : ".json";

    std::vector<Sector> sectors;
    if (spec.sector != SectorChoice::Kink) sectors.push_back(Sector::Vacuum);
    if (spec.sector != SectorChoice::Vacuum) sectors.push_back(Sector::Kink);

    std::map<Sector, SectorData> data;
    for (Sector s : sectors) data.emplace(s, compute_sector(spec.params, s));

    // Profile and energy describe the kink when it is active, otherwise the
    // vacuum (an all-zero series).
    const Sector main_sector =
        spec.sector == SectorChoice::Vacuum ? Sector::Vacuum : Sector::Kink;

    OutputTransaction tx;
    if (spec.outputs.count(OutputKind::Profile)) {
        Series s{{"site", "phi"}, {}};
        const auto& phi = data.at(main_sector).config.phi;
        for (size_t i = 0; i < phi.size(); ++i)
            s.rows.push_back({double(i), phi[i]});
        write_series(dir / ("profile" + ext), s, spec.format, tx);
    }
    if (spec.outputs.count(OutputKind::Energy)) {
        Series s{{"site", "energy"}, {}};
        const auto profile = energy_profile(data.at(main_sector).config);
        for (size_t i = 0; i < profile.per_site.size(); ++i)
            s.rows.push_back({double(i), profile.per_site[i]});
        write_series(dir / ("energy" + ext), s, spec.format, tx);
    }
    if (spec.outputs.count(OutputKind::Spectrum)) {
        for (Sector sec : sectors) {
            Series s{{"k", "omega"}, {}};
            const auto& omega = data.at(sec).modes.omega;
            for (int k = 0; k < omega.size(); ++k)
                s.rows.push_back({double(k), omega[k]});
            write_series(dir / ("spectrum_" + sector_suffix(sec) + ext), s,
                         spec.format, tx);
        }
    }
    if (spec.outputs.count(OutputKind::Correlations)) {
        for (int anchor : spec.anchor_sites) {
            Series s;
            s.columns = {"separation"};
            std::vector<CorrelationProfile> profiles;
            for (Sector sec : sectors) {
                s.columns.push_back("xi_" + sector_suffix(sec));
                profiles.push_back(
                    correlation_profile(data.at(sec).cov, anchor));
            }
            for (int i = 0; i < spec.params.n_sites; ++i) {
                std::vector<double> row{double(i - anchor)};
                for (const auto& p : profiles) row.push_back(p.xi[i]);
                s.rows.push_back(std::move(row));
            }
            write_series(
                dir / ("correlations_m" + std::to_string(anchor) + ext), s,
                spec.format, tx);
        }
    }
    if (spec.outputs.count(OutputKind::EntropyScan)) {
        const auto lengths = scan_lengths(spec.params.n_sites, spec.scan_stride);
        for (Sector sec : sectors) {
            const auto scan = entropy_scan(data.at(sec).modes, lengths, sec);
            Series s{{"ell", "entropy"}, {}};
            for (size_t i = 0; i < scan.lengths.size(); ++i)
                s.rows.push_back({double(scan.lengths[i]), scan.entropy[i]});
            write_series(dir / ("entropy_" + sector_suffix(sec) + ext), s,
                         spec.format, tx);
        }
    }

    RunResult result;
    result.files = tx.commit();
    return result;
}

SectorChoice parse_sector_choice(const std::string& s) {
    if (s == "vacuum") return SectorChoice::Vacuum;
    if (s == "kink") return SectorChoice::Kink;
    if (s == "both") return SectorChoice::Both;
    throw DomainError("unknown sector '" + s + "'");
}

OutputKind parse_output_kind(const std::string& s) {
    if (s == "profile") return OutputKind::Profile;
    if (s == "energy") return OutputKind::Energy;
    if (s == "correlations") return OutputKind::Correlations;
    if (s == "entropy-scan") return OutputKind::EntropyScan;
    if (s == "spectrum") return OutputKind::Spectrum;
    throw DomainError("unknown output '" + s + "'");
}

OutputFormat parse_output_format(const std::string& s) {
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    throw DomainError("unknown format '" + s + "'");
}

void apply_config_file(ExperimentSpec& spec, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file " + path);
    std::string line;
    int lineno = 0;
    std::optional<std::string> preset_name;
    std::map<std::string, std::string> kv;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (eq == std::string::npos)
            throw DomainError("config line " + std::to_string(lineno) +
                              ": expected key=value");
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string()
                                          : s.substr(b, e - b + 1);
        };
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    if (auto it = kv.find("preset"); it != kv.end()) {
        const double a = kv.count("a") ? std::stod(kv.at("a")) : spec.params.a;
        spec = preset(it->second, a);
    }
    for (const auto& [key, value] : kv) {
        if (key == "preset") continue;
        if (key == "a")
            spec.params.a = std::stod(value);
        else if (key == "g")
            spec.params.g = std::stod(value);
        else if (key == "sites")
            spec.params.n_sites = std::stoi(value);
        else if (key == "sector")
            spec.sector = parse_sector_choice(value);
        else if (key == "stride")
            spec.scan_stride = std::stoi(value);
        else if (key == "format")
            spec.format = parse_output_format(value);
        else if (key == "out")
            spec.output_path = value;
        else if (key == "outputs") {
            spec.outputs.clear();
            std::stringstream ss(value);
            std::string tok;
            while (std::getline(ss, tok, ','))
                spec.outputs.insert(parse_output_kind(tok));
        } else if (key == "anchor") {
            spec.anchor_sites.clear();
            std::stringstream ss(value);
            std::string tok;
            while (std::getline(ss, tok, ','))
                spec.anchor_sites.push_back(std::stoi(tok));
        } else {
            throw DomainError("unknown config key '" + key + "'");
        }
    }
}

}  // namespace dsg
