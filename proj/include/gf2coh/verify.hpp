#ifndef GF2COH_VERIFY_HPP
#define GF2COH_VERIFY_HPP

#include <string>
#include <vector>

namespace gf2coh::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;   // counterexample or summary
};

bool all_pass(const std::vector<CheckResult>& results);

// The numbered verification suites. Ranges and tolerances (everything here
// is exact) are fixed inside; each returns one entry per checked property.
std::vector<CheckResult> check_paper_table();            // 1: b3 row for n = 3..20
std::vector<CheckResult> check_closed_forms();           // 2: closed forms vs brute force
std::vector<CheckResult> check_m2_equality();            // 3: m2(n) vs m0(n) Betti numbers
std::vector<CheckResult> check_h3_basis();               // 4: explicit H^3 basis
std::vector<CheckResult> check_infinite_graded();        // 5: partition counts vs graded Betti
std::vector<CheckResult> check_interweaving();           // 6: involution vs both differentials
std::vector<CheckResult> check_obstruction_systems();    // 7: solvability, solution, dependency
std::vector<CheckResult> check_gf2_oracle();             // 8: rank/kernel/solve vs enumeration
std::vector<CheckResult> check_structural();             // 9: d∘d, Leibniz, factorization, DF
std::vector<CheckResult> check_congruences();            // 10: binomial congruences

/// Suites runnable from the command line. "all" concatenates everything.
std::vector<std::string> suite_names();
bool is_suite(const std::string& name);
std::vector<CheckResult> run_suite(const std::string& name);

} // namespace gf2coh::verify

#endif
