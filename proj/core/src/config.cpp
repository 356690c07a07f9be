#include "photospin/config.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "photospin/errors.hpp"

namespace photospin {

std::string to_string(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::Entangle: return "entangle";
        case ExperimentKind::Transfer: return "transfer";
        case ExperimentKind::Echo: return "echo";
        case ExperimentKind::Fringe: return "fringe";
        case ExperimentKind::LossBudget: return "lossbudget";
        case ExperimentKind::Eq5Check: return "eq5check";
    }
    return "?";
}

ExperimentKind experiment_from_string(const std::string& s) {
    if (s == "entangle") return ExperimentKind::Entangle;
    if (s == "transfer") return ExperimentKind::Transfer;
    if (s == "echo") return ExperimentKind::Echo;
    if (s == "fringe") return ExperimentKind::Fringe;
    if (s == "lossbudget") return ExperimentKind::LossBudget;
    if (s == "eq5check") return ExperimentKind::Eq5Check;
    throw ConfigParseError("unknown experiment '" + s + "'");
}

std::vector<double> EchoSweepConfig::spans() const {
    std::vector<double> out;
    if (span_steps < 1) throw InvalidParameterError("span_steps must be >= 1");
    if (span_steps == 1) {
        out.push_back(span_start_ns);
        return out;
    }
    const double step = (span_stop_ns - span_start_ns) / (span_steps - 1);
    for (int i = 0; i < span_steps; ++i) out.push_back(span_start_ns + i * step);
    return out;
}

void RunConfig::validate() const {
    if (trials < 1) throw InvalidParameterError("trials must be >= 1");
    noise.validate();
    if (echo.phase_steps < 4 || fringe.phase_steps < 4) {
        throw InvalidParameterError("phase_steps must be >= 4");
    }
    if (fringe.spin_bit != 0 && fringe.spin_bit != 1) {
        throw InvalidParameterError("fringe spin_bit must be 0 or 1");
    }
    if (echo.span_start_ns <= 0.0 || echo.span_stop_ns < echo.span_start_ns) {
        throw InvalidParameterError("echo span range invalid");
    }
    for (const auto& t : transfer.targets) target_from_name(t);
}

std::string RunConfig::effective_out_path() const {
    return out_path.empty() ? to_string(experiment) + ".csv" : out_path;
}

TargetState target_from_name(const std::string& name) {
    if (name == "H") return TargetState::h();
    if (name == "V") return TargetState{Complex(0, 0), Complex(1, 0)};
    if (name == "D+") return TargetState::d_plus();
    if (name == "D-") {
        const double r = 1.0 / std::sqrt(2.0);
        return TargetState{Complex(r, 0), Complex(-r, 0)};
    }
    if (name == "S+") return TargetState::sigma_plus();
    if (name == "S-") {
        const double r = 1.0 / std::sqrt(2.0);
        return TargetState{Complex(r, 0), Complex(0, -r)};
    }
    throw InvalidParameterError("unknown target name '" + name + "' (H, V, D+, D-, S+, S-)");
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw ConfigParseError("key '" + key + "': cannot parse number '" + v + "'");
    }
}

std::int64_t parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const long long i = std::stoll(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return i;
    } catch (const std::exception&) {
        throw ConfigParseError("key '" + key + "': cannot parse integer '" + v + "'");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const unsigned long long i = std::stoull(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return i;
    } catch (const std::exception&) {
        throw ConfigParseError("key '" + key + "': cannot parse integer '" + v + "'");
    }
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigParseError("key '" + key + "': cannot parse boolean '" + v + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

void apply_key(RunConfig& cfg, const std::string& section, const std::string& key,
               const std::string& value) {
    const std::string q = section.empty() ? key : section + "." + key;
    auto& n = cfg.noise;

    if (q == "experiment") {
        cfg.experiment = experiment_from_string(value);
    } else if (q == "seed") {
        cfg.seed = parse_u64(q, value);
    } else if (q == "trials") {
        cfg.trials = parse_int(q, value);
    } else if (q == "engine") {
        if (value == "mc" || value == "montecarlo") {
            cfg.engine = Engine::MonteCarlo;
        } else if (value == "exact") {
            cfg.engine = Engine::Exact;
        } else {
            throw ConfigParseError("engine must be 'exact' or 'mc'");
        }
    } else if (q == "out") {
        cfg.out_path = value;
    } else if (q == "noise_preset") {
        if (value == "calibrated") {
            cfg.noise = calibrated_noise_model();
        } else if (value == "off") {
            cfg.noise = NoiseModel::ideal();
        } else {
            throw ConfigParseError("noise_preset must be 'calibrated' or 'off'");
        }
    } else if (q == "source.init_error") {
        n.source.init_error = parse_double(q, value);
    } else if (q == "source.reexcitation_weight") {
        n.source.reexcitation_weight = parse_double(q, value);
    } else if (q == "source.zeeman_splitting_ghz") {
        n.source.zeeman_splitting_ghz = parse_double(q, value);
    } else if (q == "source.excitation_pulse_width_ps") {
        n.source.excitation_pulse_width_ps = parse_double(q, value);
    } else if (q == "spin.t2_star_ns") {
        n.spin.t2_star_ns = parse_double(q, value);
    } else if (q == "spin.t2_echo_us") {
        n.spin.t2_echo_us = parse_double(q, value);
    } else if (q == "spin.larmor_freq_ghz") {
        n.spin.larmor_freq_ghz = parse_double(q, value);
    } else if (q == "spin.readout_fidelity") {
        n.spin.readout_fidelity = parse_double(q, value);
    } else if (q == "spin.rotation_error") {
        n.spin.rotation_error = parse_double(q, value);
    } else if (q == "optics.etalon_t_center_ghz") {
        n.etalon_t.center_ghz = parse_double(q, value);
    } else if (q == "optics.etalon_r_center_ghz") {
        n.etalon_r.center_ghz = parse_double(q, value);
    } else if (q == "optics.etalon_fwhm_ghz") {
        n.etalon_t.fwhm_ghz = n.etalon_r.fwhm_ghz = parse_double(q, value);
    } else if (q == "optics.etalon_model") {
        EtalonModel m;
        if (value == "ideal") {
            m = EtalonModel::IdealProjector;
        } else if (value == "lorentzian") {
            m = EtalonModel::LorentzianLeakage;
        } else {
            throw ConfigParseError("etalon_model must be 'ideal' or 'lorentzian'");
        }
        n.etalon_t.model = n.etalon_r.model = m;
    } else if (q == "eom.modulation_freq_ghz") {
        n.eom.modulation_freq_ghz = parse_double(q, value);
    } else if (q == "eom.modulation_depth") {
        n.eom.modulation_depth = parse_double(q, value);
    } else if (q == "eom.phase_offset_rad") {
        n.eom.phase_offset_rad = parse_double(q, value);
    } else if (q == "eom.rf_slope") {
        n.eom.rf_slope = static_cast<int>(parse_int(q, value));
    } else if (q == "eom.sideband_order") {
        n.eom.sideband_order = static_cast<int>(parse_int(q, value));
    } else if (q == "protocol.meas_delay_ns") {
        n.meas_delay_ns = parse_double(q, value);
    } else if (q == "protocol.analyzer_error") {
        n.analyzer_error = parse_double(q, value);
    } else if (q == "protocol.storage_span_ns") {
        n.storage_span_ns = parse_double(q, value);
    } else if (q == "protocol.storage_echo") {
        n.storage_echo = parse_bool(q, value);
    } else if (q == "protocol.detector_map") {
        const auto parts = split(value, ',');
        if (parts.size() != 4) throw ConfigParseError("detector_map needs 4 entries");
        for (int i = 0; i < 4; ++i) {
            n.detector_map[i] = static_cast<int>(parse_int(q, parts[i]));
        }
    } else if (q == "protocol.correction_mode") {
        if (value == "postprocess") {
            n.correction_mode = CorrectionMode::PostProcess;
        } else if (value == "channel") {
            n.correction_mode = CorrectionMode::Channel;
        } else {
            throw ConfigParseError("correction_mode must be 'postprocess' or 'channel'");
        }
    } else if (q == "protocol.resource") {
        if (value == "entangled") {
            n.resource = ResourceKind::Entangled;
        } else if (value == "separable") {
            n.resource = ResourceKind::SeparableClassical;
        } else if (value == "product") {
            n.resource = ResourceKind::ProductMixed;
        } else {
            throw ConfigParseError("resource must be entangled|separable|product");
        }
    } else if (q == "protocol.stage_efficiencies" || q == "protocol.stage_losses") {
        // Two readings of the published percentages: values are either the
        // stage efficiency directly or the stage loss (efficiency = 1 - value).
        const bool as_loss = (q == "protocol.stage_losses");
        n.loss_stages.clear();
        if (!value.empty() && value != "none") {
            for (const auto& item : split(value, ',')) {
                const auto kv = split(item, ':');
                if (kv.size() != 2) {
                    throw ConfigParseError("budget entries are name:value");
                }
                const double v = parse_double(q, kv[1]);
                n.loss_stages.push_back({kv[0], as_loss ? 1.0 - v : v});
            }
        }
    } else if (q == "transfer.targets") {
        cfg.transfer.targets = split(value, ',');
    } else if (q == "echo.sequence") {
        if (value == "echo") {
            cfg.echo.sequence = SweepSequence::Echo;
        } else if (value == "ramsey") {
            cfg.echo.sequence = SweepSequence::Ramsey;
        } else {
            throw ConfigParseError("echo.sequence must be 'echo' or 'ramsey'");
        }
    } else if (q == "echo.span_start_ns") {
        cfg.echo.span_start_ns = parse_double(q, value);
    } else if (q == "echo.span_stop_ns") {
        cfg.echo.span_stop_ns = parse_double(q, value);
    } else if (q == "echo.span_steps") {
        cfg.echo.span_steps = static_cast<int>(parse_int(q, value));
    } else if (q == "echo.phase_steps") {
        cfg.echo.phase_steps = static_cast<int>(parse_int(q, value));
    } else if (q == "fringe.phase_steps") {
        cfg.fringe.phase_steps = static_cast<int>(parse_int(q, value));
    } else if (q == "fringe.spin_bit") {
        cfg.fringe.spin_bit = static_cast<int>(parse_int(q, value));
    } else {
        throw ConfigParseError("unknown config key '" + q + "'");
    }
}

} // namespace

RunConfig parse_config(const std::string& text, RunConfig base) {
    RunConfig cfg = std::move(base);
    std::istringstream in(text);
    std::string raw, section;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.rfind("##", 0) == 0) continue;
        if (line.rfind("# ", 0) == 0) line = trim(line.substr(2));
        if (line.empty() || line == "#") continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigParseError("line " + std::to_string(line_no) +
                                       ": unterminated section header");
            }
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue; // comment or CSV payload
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigParseError("line " + std::to_string(line_no) + ": empty key");
        }
        // Qualified keys work outside their section (the CSV echo is flat).
        const auto dot = key.find('.');
        if (dot != std::string::npos) {
            apply_key(cfg, key.substr(0, dot), key.substr(dot + 1), value);
        } else {
            apply_key(cfg, section, key, value);
        }
    }
    return cfg;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), std::move(base));
}

namespace {

std::string fmt_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

std::string serialize_config(const RunConfig& cfg) {
    const auto& n = cfg.noise;
    std::ostringstream o;
    o << "experiment = " << to_string(cfg.experiment) << "\n";
    o << "seed = " << cfg.seed << "\n";
    o << "trials = " << cfg.trials << "\n";
    o << "engine = " << (cfg.engine == Engine::Exact ? "exact" : "mc") << "\n";
    o << "source.init_error = " << fmt_full(n.source.init_error) << "\n";
    o << "source.reexcitation_weight = " << fmt_full(n.source.reexcitation_weight) << "\n";
    o << "source.zeeman_splitting_ghz = " << fmt_full(n.source.zeeman_splitting_ghz) << "\n";
    o << "source.excitation_pulse_width_ps = " << fmt_full(n.source.excitation_pulse_width_ps)
      << "\n";
    o << "spin.t2_star_ns = " << fmt_full(n.spin.t2_star_ns) << "\n";
    o << "spin.t2_echo_us = " << fmt_full(n.spin.t2_echo_us) << "\n";
    o << "spin.larmor_freq_ghz = " << fmt_full(n.spin.larmor_freq_ghz) << "\n";
    o << "spin.readout_fidelity = " << fmt_full(n.spin.readout_fidelity) << "\n";
    o << "spin.rotation_error = " << fmt_full(n.spin.rotation_error) << "\n";
    o << "optics.etalon_t_center_ghz = " << fmt_full(n.etalon_t.center_ghz) << "\n";
    o << "optics.etalon_r_center_ghz = " << fmt_full(n.etalon_r.center_ghz) << "\n";
    o << "optics.etalon_fwhm_ghz = " << fmt_full(n.etalon_t.fwhm_ghz) << "\n";
    o << "optics.etalon_model = "
      << (n.etalon_t.model == EtalonModel::IdealProjector ? "ideal" : "lorentzian") << "\n";
    o << "eom.modulation_freq_ghz = " << fmt_full(n.eom.modulation_freq_ghz) << "\n";
    o << "eom.modulation_depth = " << fmt_full(n.eom.modulation_depth) << "\n";
    o << "eom.phase_offset_rad = " << fmt_full(n.eom.phase_offset_rad) << "\n";
    o << "eom.rf_slope = " << n.eom.rf_slope << "\n";
    o << "eom.sideband_order = " << n.eom.sideband_order << "\n";
    o << "protocol.meas_delay_ns = " << fmt_full(n.meas_delay_ns) << "\n";
    o << "protocol.analyzer_error = " << fmt_full(n.analyzer_error) << "\n";
    o << "protocol.storage_span_ns = " << fmt_full(n.storage_span_ns) << "\n";
    o << "protocol.storage_echo = " << (n.storage_echo ? "true" : "false") << "\n";
    o << "protocol.detector_map = " << n.detector_map[0] << "," << n.detector_map[1] << ","
      << n.detector_map[2] << "," << n.detector_map[3] << "\n";
    o << "protocol.correction_mode = "
      << (n.correction_mode == CorrectionMode::PostProcess ? "postprocess" : "channel")
      << "\n";
    o << "protocol.resource = "
      << (n.resource == ResourceKind::Entangled
              ? "entangled"
              : (n.resource == ResourceKind::SeparableClassical ? "separable" : "product"))
      << "\n";
    o << "protocol.stage_efficiencies = ";
    if (n.loss_stages.empty()) {
        o << "none";
    } else {
        for (std::size_t i = 0; i < n.loss_stages.size(); ++i) {
            if (i) o << ",";
            o << n.loss_stages[i].name << ":" << fmt_full(n.loss_stages[i].efficiency);
        }
    }
    o << "\n";
    o << "transfer.targets = ";
    for (std::size_t i = 0; i < cfg.transfer.targets.size(); ++i) {
        if (i) o << ",";
        o << cfg.transfer.targets[i];
    }
    o << "\n";
    o << "echo.sequence = "
      << (cfg.echo.sequence == SweepSequence::Echo ? "echo" : "ramsey") << "\n";
    o << "echo.span_start_ns = " << fmt_full(cfg.echo.span_start_ns) << "\n";
    o << "echo.span_stop_ns = " << fmt_full(cfg.echo.span_stop_ns) << "\n";
    o << "echo.span_steps = " << cfg.echo.span_steps << "\n";
    o << "echo.phase_steps = " << cfg.echo.phase_steps << "\n";
    o << "fringe.phase_steps = " << cfg.fringe.phase_steps << "\n";
    o << "fringe.spin_bit = " << cfg.fringe.spin_bit << "\n";
    return o.str();
}

} // namespace photospin
