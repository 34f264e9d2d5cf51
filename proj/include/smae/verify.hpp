#pragma once

#include "smae/analysis.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace smae::verify {

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<Check> checks;

    bool passed() const;
    std::size_t failures() const;
    void add(std::string name, bool ok, std::string detail = {});
};

/// Random non-Lagrangian distribution with sparse low-degree integer
/// polynomial components.
Distribution2 random_distribution(std::mt19937_64& rng, int max_degree = 2, int max_terms = 2);

/// Identities of the attached objects and of I^1, I^2, I^3 on one distribution.
void check_identities(const Distribution2& d, const std::string& label, SuiteResult& out);
/// I' expressed through I (and attach(D') swapping the objects).
void check_involution(const Distribution2& d, const std::string& label, SuiteResult& out);

struct Table1Row {
    const char* fields;
    int r, r_dual;
};
/// One representative per row of the class table; "E" stands for exp(-x).
const std::vector<Table1Row>& table1_rows();

SuiteResult identities(std::uint64_t seed, int count = 20);
SuiteResult involution(std::uint64_t seed, int count = 20);
SuiteResult table1();
SuiteResult jet_rank(std::uint64_t seed, int points = 3);
SuiteResult orbit_codim(std::uint64_t seed, int degree_bound = 4);

/// Runs a suite by name ("identities", "involution", "table1", "jet-rank",
/// "orbit-codim"); throws DomainError for an unknown name.
SuiteResult run(const std::string& scope, std::uint64_t seed, int degree_bound);

} // namespace smae::verify
