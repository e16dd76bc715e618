#pragma once

#include "passoc/affine.hpp"
#include "passoc/poset.hpp"
#include "passoc/realization.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace passoc {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
    /// Offending tubings, tubes or points; empty when the check passes.
    std::vector<std::string> witnesses;
};

struct VerificationReport {
    std::string subject;
    std::size_t dimension = 0;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t facets = 0;
    std::vector<std::int64_t> f;
    std::vector<std::int64_t> h;
    std::vector<CheckResult> checks;

    bool passed() const;
    const CheckResult* find(const std::string& name) const;
    /// Line-oriented, deterministic rendering.
    std::string to_text() const;
};

struct VerifyOptions {
    std::size_t max_elements = 7;
    std::int64_t max_order = 4;
    std::size_t cycle_length = 4;
    AlphaVariant variant = AlphaVariant::covers;
    /// Witnesses kept per failing check.
    std::size_t max_witnesses = 5;
};

/// Compares the realization of P with an independent oracle run: vertex sets,
/// simplicity, facets, strict interiority, infeasibility of incompatible
/// pairs and precedence cycles, the face lattice, edges and the Euler
/// relation. Throws InvalidInputError above the size limit and
/// NotConnectedError for disconnected posets; everything else is reported.
VerificationReport verify_realization(const Poset& p, const VerifyOptions& options = {});

/// The same audit for the cyclohedron of an affine poset, plus the size-n orbit
/// in every maximal tubing, orbit invariance of the functionals and the gap
/// between c and 2 n^(2n).
VerificationReport verify_affine_realization(const AffinePoset& p, const VerifyOptions& options = {});

} // namespace passoc
