// Copyright 2026 The bellsim Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <doctest.h>
#include <json.hpp>

#include <string>
#include <vector>

#include "bellsim/circuit.hpp"
#include "bellsim/cli.hpp"

using bellsim::cli::execute;

namespace {

bellsim::cli::CliResult run(std::vector<std::string> args) { return execute(args); }

bool contains(const std::string &hay, const std::string &needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("table reproduces the four rows") {
    const auto r = run({"table"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "psi+   0   0   1.000000000000  1.000000000000"));
    CHECK(contains(r.out, "psi-   1   0   1.000000000000  1.000000000000"));
    CHECK(contains(r.out, "phi+   0   1   1.000000000000  1.000000000000"));
    CHECK(contains(r.out, "phi-   1   1   1.000000000000  1.000000000000"));

    const auto j = nlohmann::json::parse(run({"table", "--json"}).out);
    CHECK(j["passed"] == true);
    CHECK(j["rows"].size() == 4);
    CHECK(j["rows"][1]["label"] == "psi-");
    CHECK(j["rows"][1]["bits"] == nlohmann::json::array({1, 0}));
}

TEST_CASE("discriminate a named state") {
    const auto r = run({"discriminate", "--state", "phi-", "--seed", "7"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "a1=1 a2=1 label=phi-"));
    CHECK(r.err.empty());
}

TEST_CASE("discriminate json fields") {
    const auto r = run({"discriminate", "--state", "psi-", "--json"});
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    for (const char *key : {"bits", "label", "probability", "fidelity", "shots", "frequencies"}) {
        CHECK(j.contains(key));
    }
    CHECK(j["label"] == "psi-");
    CHECK(j["bits"] == nlohmann::json::array({1, 0}));
    CHECK(j["frequencies"]["psi-"] == 1.0);
}

TEST_CASE("discriminate from amplitudes") {
    const auto r = run({"discriminate", "--amps", "0.7071067811865476,0,0.7071067811865476,0,0,0,0,0",
                        "--shots", "4000", "--seed", "3", "--json"});
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["shots"] == 4000);
    double total = 0;
    for (const auto &[k, v] : j["frequencies"].items()) {
        total += v.get<double>();
        CHECK(std::abs(v.get<double>() - 0.25) < 0.05);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-5));

    // Negative entries use the --amps=... spelling or a separate token.
    CHECK(run({"discriminate", "--amps=0,0,0.7071067811865476,0,-0.7071067811865476,0,0,0"}).exit_code == 0);
    const auto phi = run({"discriminate", "--amps", "0,0,0.7071067811865476,0,-0.7071067811865476,0,0,0"});
    CHECK(phi.exit_code == 0);
    CHECK(contains(phi.out, "label=phi-"));
}

TEST_CASE("amplitude sanity gate") {
    CHECK(run({"discriminate", "--amps", "1,0,0,0,0,0,0,1e-7"}).exit_code == 0);
    CHECK(run({"discriminate", "--amps", "1,0,0,0,0,0,0,0.01"}).exit_code == 2);
    CHECK(run({"discriminate", "--amps", "1,0,0,0"}).exit_code == 2);
    CHECK(run({"discriminate", "--amps", "1,0,0,0,0,0,0,x"}).exit_code == 2);
}

TEST_CASE("usage errors exit 2") {
    const auto bogus = run({"discriminate", "--bogus"});
    CHECK(bogus.exit_code == 2);
    CHECK(contains(bogus.err, "--state"));
    CHECK(run({}).exit_code == 2);
    CHECK(run({"frobnicate"}).exit_code == 2);
    CHECK(run({"discriminate"}).exit_code == 2);
    CHECK(run({"discriminate", "--state", "bell"}).exit_code == 2);
    CHECK(run({"discriminate", "--state", "psi+", "--amps", "1,0,0,0,0,0,0,0"}).exit_code == 2);
    CHECK(run({"discriminate", "--state", "psi+", "--shots", "0"}).exit_code == 2);
    CHECK(run({"demo-dense", "--state", "psi+"}).exit_code == 2);
    CHECK(run({"demo-dense", "--state", "psi+", "--op", "h1"}).exit_code == 2);
    CHECK(run({"verify", "--trials", "0"}).exit_code == 2);
}

TEST_CASE("help exits 0") {
    const auto r = run({"--help"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "discriminate"));
}

TEST_CASE("demo-dense") {
    const auto r = run({"demo-dense", "--state", "psi+", "--op", "x1", "--seed", "1"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "expected=phi+ a1=0 a2=1 label=phi+"));
    for (const char *op : {"x1", "x2", "y1", "y2", "z1", "z2", "hh"}) {
        for (const char *st : {"psi+", "psi-", "phi+", "phi-"}) {
            const auto j = nlohmann::json::parse(
                run({"demo-dense", "--state", st, "--op", op, "--json"}).out);
            CHECK(j["passed"] == true);
            CHECK(j["expected"] == j["label"]);
        }
    }
}

TEST_CASE("print-circuit emits the parseable discriminator") {
    const auto r = run({"print-circuit"});
    CHECK(r.exit_code == 0);
    CHECK(bellsim::parse_circuit(r.out) == bellsim::discriminator_circuit());
    CHECK(r.out.rfind("qubits 4\n", 0) == 0);
}

TEST_CASE("verify") {
    const auto r = run({"verify", "--trials", "100", "--seed", "5"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "trials=100 seed=5"));
    CHECK_FALSE(contains(r.out, "FAIL"));
    const auto j = nlohmann::json::parse(run({"verify", "--trials", "50", "--json"}).out);
    CHECK(j["passed"] == true);
    CHECK(j["checks"].contains("stabilizer_xx"));
}

TEST_CASE("identical argv gives byte-identical output") {
    // Squared norm of these amplitudes is exactly 1.
    const std::vector<std::string> amps{"discriminate", "--amps",
                                        "0.6,0.1,0.3,-0.2,0.5,0.0,0.4,0.3", "--shots", "5000",
                                        "--seed", "11"};
    const auto a = run(amps);
    CHECK(a.exit_code == 0);
    CHECK(a.out == run(amps).out);

    const std::vector<std::string> named{"discriminate", "--state", "psi+", "--shots", "3000",
                                         "--seed", "11", "--json"};
    CHECK(run(named).out == run(named).out);

    const std::vector<std::string> other_seed{"discriminate", "--amps",
                                              "0.6,0.1,0.3,-0.2,0.5,0.0,0.4,0.3", "--shots",
                                              "5000", "--seed", "12"};
    CHECK(run(other_seed).out != a.out);
}
