#pragma once
// Named verification suites: batteries of exact checks over the modules,
// reported as (check id, status, witness, wall time) sorted by id.
//
//   hopf-axioms     presentations, determinant, bialgebra/antipode axioms, S^2
//   pairing-axioms  pairing axioms, antipode compatibility, well-definedness, <E,x>, <F,x>
//   pbw             graded dimensions of U^+, U^- against root-vector counts,
//                   triangular decomposition, finite-quotient dimensions
//   frobenius       quantum Frobenius centrality, Hbar / K_+- bases, the section gamma,
//                   l-th power coproducts
//   restricted      central elements of U and the radical inclusions
//   gram            rank of the uhat x Hbar Gram matrix and the <E^M, xbar^N> structure
//   datum-lattice   validation, dimension identities and order properties on a corpus
//   predicates      classification predicates and character groups on fixed examples
//   all             every suite above

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qgl/scalar.hpp"

namespace qgl {

struct CheckResult {
    std::string id;
    std::string status;  // "pass", "fail" or "skipped"
    std::string witness;
    double seconds = 0;
};

struct SuiteReport {
    std::string name;
    std::vector<CheckResult> checks;
    bool passed() const;
    int count(const std::string& status) const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

struct SuiteConfig {
    int n = 2;
    ParameterSpec spec = ParameterSpec::root(3, 1, 2);
    int degree = 5;
    std::string corpus;  // datum corpus path; empty selects the shipped corpus
    /// Receives one line per finished check (for progress on stderr).
    std::function<void(const std::string&)> progress;
};

const std::vector<std::string>& suite_names();
/// Throws ValidationError on an unknown suite name.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

/// Path of the shipped datum corpus.
std::string default_corpus_path();

}  // namespace qgl
