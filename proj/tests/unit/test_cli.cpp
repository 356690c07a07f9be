// End-to-end checks of the installed CLI binary: exit codes, output schema,
// byte-level reproducibility and the config round trip.
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "photospin/experiments.hpp"

namespace {

std::string cli_path() { return PHOTOSPIN_CLI_PATH; }

int run_cli(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string first_data_header(const std::string& body) {
    std::istringstream in(body);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') return line;
    }
    return "";
}

} // namespace

TEST_CASE("exit codes for config, parameter and io failures") {
    CHECK(run_cli("eq5check --trials 3 --out /tmp/psc_ok.csv") == 0);
    // unparseable config file
    {
        std::ofstream f("/tmp/psc_bad.cfg");
        f << "definitely_not_a_key = 1\n";
    }
    CHECK(run_cli("entangle --config /tmp/psc_bad.cfg") == 2);
    // semantically invalid parameter
    {
        std::ofstream f("/tmp/psc_invalid.cfg");
        f << "spin.readout_fidelity = 2.0\n";
    }
    CHECK(run_cli("entangle --config /tmp/psc_invalid.cfg --trials 10") == 3);
    // unwritable output path
    CHECK(run_cli("eq5check --trials 2 --out /nonexistent_dir/x.csv") == 4);
}

TEST_CASE("identical seed and config give byte-identical output") {
    REQUIRE(run_cli("entangle --trials 4000 --seed 31415 --out /tmp/psc_r1.csv") == 0);
    REQUIRE(run_cli("entangle --trials 4000 --seed 31415 --out /tmp/psc_r2.csv") == 0);
    CHECK(slurp("/tmp/psc_r1.csv") == slurp("/tmp/psc_r2.csv"));
    REQUIRE(run_cli("entangle --trials 4000 --seed 31416 --out /tmp/psc_r3.csv") == 0);
    CHECK(slurp("/tmp/psc_r1.csv") != slurp("/tmp/psc_r3.csv"));
}

TEST_CASE("rerunning on the emitted header reproduces the run") {
    REQUIRE(run_cli("transfer --trials 500 --seed 7 --out /tmp/psc_t1.csv") == 0);
    REQUIRE(run_cli("transfer --config /tmp/psc_t1.csv --out /tmp/psc_t2.csv") == 0);
    // the out path is not part of the header, so bytes must match exactly
    CHECK(slurp("/tmp/psc_t1.csv") == slurp("/tmp/psc_t2.csv"));
}

TEST_CASE("CSV schemas are stable") {
    using photospin::ExperimentKind;
    const struct {
        const char* cmd;
        const char* extra;
        const char* header;
    } cases[] = {
        {"entangle", "--trials 300",
         "basis,spin_bit,photon_bit,count,probability,stderr"},
        {"transfer", "--trials 300", "target,detector,heralds,correct,fidelity,stderr"},
        {"echo", "--trials 60", "span_ns,visibility,stderr"},
        {"fringe", "--trials 60", "rf_phase_rad,coincidence_prob,stderr"},
        {"lossbudget", "--trials 1000", "stage,efficiency,cumulative"},
        {"eq5check", "--trials 2",
         "target,alpha_re,alpha_im,beta_re,beta_im,outcome,probability,residual,"
         "phase_re,phase_im,corrected_fidelity"},
    };
    for (const auto& c : cases) {
        const std::string out = std::string("/tmp/psc_schema_") + c.cmd + ".csv";
        REQUIRE(run_cli(std::string(c.cmd) + " " + c.extra + " --seed 5 --out " + out) == 0);
        CHECK(first_data_header(slurp(out)) == c.header);
    }
}

TEST_CASE("noise off preset produces perfect transfer summaries") {
    REQUIRE(run_cli("transfer --noise off --engine exact --trials 1 --seed 5 "
                    "--out /tmp/psc_ideal.csv") == 0);
    const auto body = slurp("/tmp/psc_ideal.csv");
    // every fidelity cell of the per-detector rows reads exactly 1
    std::istringstream in(body);
    std::string line;
    bool saw_rows = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("target,", 0) == 0) continue;
        saw_rows = true;
        const auto last_comma = line.rfind(',');
        const auto prev_comma = line.rfind(',', last_comma - 1);
        CHECK(line.substr(prev_comma + 1, last_comma - prev_comma - 1) == "1");
    }
    CHECK(saw_rows);
}
