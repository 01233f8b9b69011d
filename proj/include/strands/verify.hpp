// Verification suites: one exhaustive sweep per published acceptance
// criterion, each returning a CheckReport with witness strings for every
// failing instance. The CLI `verify` subcommand and the acceptance runner are
// both thin wrappers around run_suites.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "strands/util.hpp"

namespace strands {

struct SuiteOptions {
  int max_n = 3;     // sweep n = 1..max_n
  Half2 cap2 = -1;   // per-line doubled weight cap; negative = suite default
  int jobs = 1;
  std::uint64_t seed = 1;            // randomized triple sampling
  std::size_t random_triples = 10000;  // per algebra, n = 3 only
};

// d∘d = 0 on every generator of both algebras (default cap 3).
CheckReport check_differential_squared(const SuiteOptions& opt);
// Associativity on composable triples and Leibniz on composable pairs,
// exhaustive for n <= 2 (default cap 2) plus seeded random triples at n = 3.
CheckReport check_dg_laws(const SuiteOptions& opt);
// Maslov drops by exactly 1 under d; all Alexander gradings preserved by d
// and additive under nonzero products. Same sweep as check_dg_laws.
CheckReport check_grading_laws(const SuiteOptions& opt);
// Theta_S(deg'(a)) = (m, w_un), Psi collapse to (m, w), deg' multiplicative
// on nonzero products, linking form identically zero (default cap 3).
CheckReport check_group_gradings(const SuiteOptions& opt);
// split/unsplit mutually inverse, chain maps, grading-compatible on every
// S = {} piece (default cap 3).
CheckReport check_splitting(const SuiteOptions& opt);
// Weight-r local homology vs. the closed forms: generating intervals give
// dimension 1 iff some r_i = 0, edge intervals always 1, concentrated in
// Maslov 0 and generated by the canonical max-Maslov cycle (l, r_i <= 3).
CheckReport check_local_homology(const SuiteOptions& opt);
// Every (x,y,w) piece of the S = {} algebra matches the predicted one-U-per
// -line quotient count, concentrated in Maslov 0 (default cap 3).
CheckReport check_full_homology(const SuiteOptions& opt);
// The induced homology map of the algebra morphism is bijective on every
// graded piece: n <= 2 all S, n = 3 for S in {{}, {2}, {1,2,3}} (cap 2).
CheckReport check_quasi_iso(const SuiteOptions& opt);
// Every quiver relation instance maps to zero/equality, normal-form products
// are intertwined, and the morphism is injective per piece (default cap 2).
CheckReport check_presentation(const SuiteOptions& opt);
// rho and o are commuting involutions on both algebras and intertwine the
// morphism (default cap 2).
CheckReport check_symmetries(const SuiteOptions& opt);
// Letter-path and closed-form images agree on every normal form, and the
// canonical path maps to the minimal generator (default cap 3).
CheckReport check_closed_form(const SuiteOptions& opt);
// parse(format(e)) = e for every enumerated generator and per-piece sum of
// both algebras (default cap 3).
CheckReport check_roundtrip(const SuiteOptions& opt);

struct SuiteResult {
  std::string name;
  CheckReport report;
  double seconds = 0.0;
};

// Names in criterion order, usable with run_suites.
const std::vector<std::string>& suite_names();

// Run the named suites ("all" expands to every suite). Unknown name ->
// ParameterError.
std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    const SuiteOptions& opt);

}  // namespace strands
