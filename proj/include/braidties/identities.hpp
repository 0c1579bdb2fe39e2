#pragma once

/**
 * @file identities.hpp
 * @brief Element identities of E_n(u) checked instance by instance, and the
 * Gram matrix of the invariant form on the basis.
 */

#include "braidties/algebra.hpp"
#include "braidties/linalg.hpp"

#include <random>
#include <string>
#include <vector>

namespace braidties {

struct IdentityCheck {
    std::string name;
    std::size_t instances = 0;
    std::size_t failures = 0;
    bool pass() const { return instances > 0 && failures == 0; }
};

struct IdentityReport {
    int n = 0;
    std::vector<IdentityCheck> checks;
    bool pass = false;
};

/**
 * Conjugation T_w E_A T_w^{-1} = E_{wA}, inclusion E_A E_B = E_{A v B}, the
 * three adjacent-index formulas, reflection of E_{jk} by T_i and T_i^{-1},
 * commuting ties, extension over random relation sets, and the flip laws.
 * With exhaustive set every instance at size n is checked (w, A and pairs);
 * otherwise `samples` random instances per family.
 */
IdentityReport structural_identities(int n, std::mt19937_64& rng, bool exhaustive, int samples);

/// star antiautomorphism and form invariance on random triples of basis combinations.
IdentityReport form_identities(int n, std::mt19937_64& rng, int samples);

/// <b_i, b_j> over the basis keys in ascending order.
SparseMatrix gram_matrix(int n);

}  // namespace braidties
