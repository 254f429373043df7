// Drives the jcsim binary end to end: exit codes, CSV contracts, config
// files and reproducibility.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

fs::path work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "jcsim_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

int run(const std::string& args) {
    const std::string cmd = std::string(JCSIM_BINARY) + " " + args + " >/dev/null 2>/dev/null";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> footer;
};

Csv read_csv(const fs::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    Csv csv;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            csv.footer.push_back(line);
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (first) {
            csv.header = cells;
            first = false;
        } else {
            std::vector<double> row;
            for (const std::string& c : cells) {
                try {
                    row.push_back(std::stod(c));
                } catch (const std::invalid_argument&) {
                    row.push_back(std::nan(""));
                }
            }
            csv.rows.push_back(row);
        }
    }
    return csv;
}

double footer_value(const Csv& csv, const std::string& key) {
    for (const std::string& line : csv.footer) {
        const auto pos = line.find(key + " = ");
        if (pos != std::string::npos) {
            return std::stod(line.substr(pos + key.size() + 3));
        }
    }
    FAIL("footer key not found: ", key);
    return std::nan("");
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("spectrum emits checked vacuum Rabi doublet rows") {
    const fs::path out = work_dir() / "spectrum.csv";
    const int code =
        run("spectrum --epsilon 0 --lambda 0.1 --levels 1 --n-max 4 --check -o " + out.string());
    CHECK(code == 0);
    const Csv csv = read_csv(out);
    REQUIRE(csv.header.size() == 6);
    CHECK(csv.header[0] == "level");
    CHECK(csv.header[3] == "energy_analytic");

    bool saw_lower = false;
    bool saw_upper = false;
    for (const auto& row : csv.rows) {
        if (std::abs(row[3] - 0.9) < 1e-12) saw_lower = true;
        if (std::abs(row[3] - 1.1) < 1e-12) saw_upper = true;
        CHECK(row[5] < 1e-9);  // abs_diff column
    }
    CHECK(saw_lower);
    CHECK(saw_upper);
}

TEST_CASE("identical configuration gives byte-identical output") {
    const fs::path a = work_dir() / "rep_a.csv";
    const fs::path b = work_dir() / "rep_b.csv";
    CHECK(run("entangle --epsilon 0.3 --lambda 0.2 --samples 101 -o " + a.string()) == 0);
    CHECK(run("entangle --epsilon 0.3 --lambda 0.2 --samples 101 -o " + b.string()) == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(!slurp(a).empty());

    // The detuned concurrence tops out at sin^2(2 theta) = 0.64.
    double peak = 0.0;
    for (const auto& row : read_csv(a).rows) peak = std::max(peak, row[1]);
    CHECK(peak == doctest::Approx(0.64).epsilon(0.01));
}

TEST_CASE("mixing physical and dimensionless parameters is a configuration error") {
    CHECK(run("spectrum --epsilon 0.1 --omega-a 1.1") == 2);
}

TEST_CASE("invalid truncation and degenerate parameters are configuration errors") {
    CHECK(run("verify --n-max 0") == 2);
    CHECK(run("evolve --epsilon 0 --lambda 0 --t-end 1") == 2);
    CHECK(run("spectrum --levels 99") == 2);
    CHECK(run("dissipate --gamma -1 --t-end 1") == 2);
}

TEST_CASE("evolve starts in the shared-photon state and conserves norm") {
    const fs::path out = work_dir() / "evolve.csv";
    const int code = run("evolve --epsilon 0 --lambda 1 --t-end 3.2 --samples 5 -o " + out.string());
    CHECK(code == 0);
    const Csv csv = read_csv(out);
    REQUIRE(csv.header.size() == 12);
    REQUIRE(csv.rows.size() == 5);
    const auto& first = csv.rows.front();
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(first[0] == 0.0);
    CHECK(first[1] == doctest::Approx(inv_sqrt2).epsilon(1e-12));  // re phi1
    CHECK(first[3] == doctest::Approx(inv_sqrt2).epsilon(1e-12));  // re phi2
    CHECK(std::abs(first[5]) < 1e-12);                             // re phi3
    CHECK(std::abs(first[7]) < 1e-12);                             // re phi4
    for (const auto& row : csv.rows) {
        CHECK(row[9] == doctest::Approx(1.0).epsilon(1e-9));             // norm
        CHECK(row[10] + row[11] == doctest::Approx(1.0).epsilon(1e-9));  // f2 + g2
    }
}

TEST_CASE("entangle footer reports peak and periods near the closed forms") {
    const fs::path out = work_dir() / "entangle.csv";
    const int code = run("entangle --epsilon 0 --lambda 1 --samples 3201 -o " + out.string());
    CHECK(code == 0);
    const Csv csv = read_csv(out);
    const double spacing = 4.0 * kPi / 3200.0;
    CHECK(std::abs(footer_value(csv, "t_peak_concurrence") - 0.5 * kPi) < spacing);
    CHECK(std::abs(footer_value(csv, "period_state") - 2.0 * kPi) < spacing);
    CHECK(std::abs(footer_value(csv, "period_concurrence") - kPi) < spacing);
    CHECK(footer_value(csv, "t_peak_predicted") == doctest::Approx(0.5 * kPi).epsilon(1e-12));
    CHECK(footer_value(csv, "period_predicted") == doctest::Approx(2.0 * kPi).epsilon(1e-12));

    // The joint-ground probability vanishes at the peak.
    double best_t = 1e9;
    double pjg_at_peak = 1.0;
    for (const auto& row : csv.rows) {
        if (std::abs(row[0] - 0.5 * kPi) < std::abs(best_t - 0.5 * kPi)) {
            best_t = row[0];
            pjg_at_peak = row[3];
        }
    }
    CHECK(pjg_at_peak < 1e-5);
}

TEST_CASE("evolve reaches the swapped state at the quarter period") {
    const fs::path out = work_dir() / "swap.csv";
    const int code = run("evolve --epsilon 0 --lambda 1 --t-end 3.141592653589793 --samples 3 -o " +
                         out.string());
    CHECK(code == 0);
    const Csv csv = read_csv(out);
    REQUIRE(csv.rows.size() == 3);
    const auto& mid = csv.rows[1];  // t = pi/2
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(std::hypot(mid[1], mid[2]) < 1e-12);                                  // phi1
    CHECK(std::hypot(mid[3], mid[4]) < 1e-12);                                  // phi2
    CHECK(std::hypot(mid[5], mid[6]) == doctest::Approx(inv_sqrt2).epsilon(1e-12));  // phi3
    CHECK(std::hypot(mid[7], mid[8]) == doctest::Approx(inv_sqrt2).epsilon(1e-12));  // phi4
}

TEST_CASE("lossless dissipate matches the closed-form entanglement trace") {
    const fs::path closed = work_dir() / "closed.csv";
    const fs::path open = work_dir() / "open.csv";
    CHECK(run("entangle --epsilon 0 --lambda 1 --t-end 2 --samples 11 -o " + closed.string()) == 0);
    CHECK(run("dissipate --epsilon 0 --lambda 1 --gamma 0 --t-end 2 --dt 0.001 --samples 11 -o " +
              open.string()) == 0);
    const Csv entangle_csv = read_csv(closed);
    const Csv dissipate_csv = read_csv(open);
    REQUIRE(entangle_csv.rows.size() == dissipate_csv.rows.size());
    for (size_t i = 0; i < entangle_csv.rows.size(); ++i) {
        CHECK(std::abs(entangle_csv.rows[i][0] - dissipate_csv.rows[i][0]) < 1e-9);   // t
        CHECK(std::abs(entangle_csv.rows[i][1] - dissipate_csv.rows[i][4]) < 1e-6);   // concurrence
        CHECK(std::abs(entangle_csv.rows[i][3] - dissipate_csv.rows[i][5]) < 1e-6);   // p_joint
    }
}

TEST_CASE("dissipate reproduces pure photon decay with uncoupled atoms") {
    const fs::path out = work_dir() / "decay.csv";
    const int code = run(
        "dissipate --e-atom-a 1 --e-atom-b 1 --omega-a 1 --omega-b 1 --kappa-a 0 --kappa-b 0 "
        "--gamma 0.5 --t-end 2 --dt 0.001 --initial phi2 --samples 11 -o " +
        out.string());
    CHECK(code == 0);
    const Csv csv = read_csv(out);
    REQUIRE(csv.header.size() == 6);
    const auto& last = csv.rows.back();
    CHECK(last[0] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(last[1] == doctest::Approx(1.0).epsilon(1e-9));             // trace
    CHECK(last[2] == doctest::Approx(std::exp(-1.0)).epsilon(1e-6));  // <N_A>
    CHECK(std::abs(last[3]) < 1e-9);                                  // <N_B>
}

TEST_CASE("options can come from a key=value config file, flags win") {
    const fs::path cfg = work_dir() / "run.cfg";
    {
        std::ofstream f(cfg);
        f << "# resonant doublet\n";
        f << "epsilon=0\n";
        f << "lambda=0.1\n";
        f << "levels=1\n";
        f << "n-max=2\n";
    }
    const fs::path out = work_dir() / "from_config.csv";
    CHECK(run("spectrum --config " + cfg.string() + " --check -o " + out.string()) == 0);
    Csv csv = read_csv(out);
    bool saw = false;
    for (const auto& row : csv.rows) {
        if (std::abs(row[3] - 0.9) < 1e-12) saw = true;
    }
    CHECK(saw);

    // A flag overrides the same key in the file.
    const fs::path out2 = work_dir() / "override.csv";
    CHECK(run("spectrum --config " + cfg.string() + " --lambda 0.2 --check -o " + out2.string()) ==
          0);
    csv = read_csv(out2);
    saw = false;
    for (const auto& row : csv.rows) {
        if (std::abs(row[3] - 0.8) < 1e-12) saw = true;
    }
    CHECK(saw);
}
