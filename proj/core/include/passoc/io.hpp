#pragma once

#include "passoc/affine.hpp"
#include "passoc/halfspace.hpp"
#include "passoc/oracle.hpp"
#include "passoc/poset.hpp"
#include "passoc/tubing.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace passoc {

/// One input document: a finite poset, or an affine poset when `order:` is
/// present.
struct PosetInput {
    std::optional<Poset> finite;
    std::optional<AffinePoset> affine;

    bool is_affine() const { return affine.has_value(); }
};

/// Throws ParseError for malformed documents and the poset construction errors
/// for invalid orders.
PosetInput parse_poset_input(std::string_view text);
PosetInput read_poset_file(const std::string& path);

/// The same document layout, flow style, elements in index order.
std::string write_poset(const Poset& p);

std::string hasse_dot(const Poset& p);
/// Residues 0..n-1 and their covers inside the window [0, 2n).
std::string affine_hasse_dot(const AffinePoset& p);
/// Reverse-inclusion Hasse diagram: an arrow T -> T' when T' adds one tube.
std::string tubing_lattice_dot(const std::vector<Tubing>& tubings,
                               const std::function<std::string(const Tubing&)>& format);

/// Polyhedral text layout, see docs/formats.md.
std::string write_ine(const HalfSpaceSystem& system);
/// Inverse of write_ine. Throws ParseError.
HalfSpaceSystem parse_ine(std::string_view text);

/// OFF mesh of a 3-dimensional polytope in an orthonormal chart of its affine
/// hull. Throws InvalidInputError for other dimensions.
std::string write_off(const HalfSpaceSystem& system, const std::vector<VertexCertificate>& vertices);

} // namespace passoc
