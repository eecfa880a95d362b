#pragma once

/*
 * Windowed exact checks of the Catalan/Fibonacci/Lucas identities.
 *
 * Each function returns report entries; a check whose window is too small
 * for the given order is reported as skipped. Inputs are built with a few
 * extra degrees of precision and compared on [0, order).
 */

#include <cstdint>
#include <string>
#include <vector>

#include "riordan/matrix.hpp"
#include "riordan/report.hpp"

namespace riordan {

/// Extra degrees carried while building inputs.
inline constexpr int kWorkingSlack = 8;

enum class EntryKind { R, Q };

/// Entry (n, j) of D FS^-1 D (R) or D LS^-1 D (Q) as a signed combination of Catalan numbers.
Rational closed_form_entry(EntryKind kind, int n, int j);

/// Fibonacci and Lucas sums of the binomial coefficients appearing in closed_form_entry, j <= j_max.
Fragment coefficient_sum_identities(int j_max);

// Structure of D FS^-1 D and D LS^-1 D.
Fragment check_displays(int order);
Check pseudo_involution_display(int order);
Fragment check_factorizations(int order);
Fragment check_catalan_motzkin_series(int order);
Fragment check_recurrences(int order);
Fragment check_partial_sums(int order);
Fragment check_row_sums(int order);
Fragment check_closed_forms(int order);

struct LabeledVector {
    std::string label;
    SeqVec v;
};

/// e_0, e_1, zero, the alternating ramp and `random_count` seeded integer vectors, all of length n.
std::vector<LabeledVector> transform_inputs(int n, std::uint64_t seed, int random_count);

/// The eight identities linking first/second kind Fibonacci and Lucas images through xC.
Fragment check_transform_identities(const std::vector<LabeledVector>& inputs, int order);
/// Generating-function forms of the same relations.
Fragment check_gf_relations(const std::vector<LabeledVector>& inputs, int order);

/// Predicates, invariant-sequence builders and conjugators on the built-in examples.
Fragment check_involutions(int order);

/// Special-matrix columns in the eigenspaces of PD and P^T D, and section eigenspace dimensions.
Fragment check_eigenspaces(int order);

} // namespace riordan
