#pragma once

#include <string>
#include <vector>

#include "twistlink/diagram.hpp"
#include "twistlink/laurent.hpp"
#include "twistlink/poly_matrix.hpp"

namespace twistlink {

/// A computed invariant together with its canonical representative under
/// multiplication by powers of x.
struct InvariantValue {
  LaurentPoly raw;
  LaurentPoly canonical;  // = normalize_x(raw)

  static InvariantValue of(LaurentPoly p) {
    InvariantValue v;
    v.canonical = normalize_x(p);
    v.raw = std::move(p);
    return v;
  }
};

/// Crossing weight blocks. Rows are indexed by the in-ports of the
/// crossing (index 0, then 1), columns by its out-ports.
PolyMatrix positive_crossing_block();  // [[1-x, -y], [-x*y^-1, 0]]
PolyMatrix negative_crossing_block();  // [[0, -x^-1*y], [-y^-1, 1-x^-1]]

/// 2n x 2n block diagonal crossing-weight matrix; blocks follow ascending
/// crossing identifier.
PolyMatrix build_M(const TwistedDiagram& d);

/// 2n x 2n permutation matrix of the edge incidences: entry
/// (2i-1+e, 2j-1+l) is 1 iff an edge runs from out-port l of the j-th
/// crossing to in-port e of the i-th crossing (crossings in ascending id
/// order, indices 1-based in that formula). Requires every bar count to
/// be even; otherwise throws SemanticError.
PolyMatrix build_P(const TwistedDiagram& d);

/// 4n x 4n versions used by the twisted invariant: M~ has blocks
/// diag(B, B) per crossing and P~ places each edge on the two sheets,
/// straight for even bar parity and sheet-crossing for odd parity.
PolyMatrix build_Mtilde(const TwistedDiagram& d);
PolyMatrix build_Ptilde(const TwistedDiagram& d);

/// Virtual-link invariant (-1)^writhe * det(M - P), defined for diagrams
/// whose bar counts are all even. Crossing-free components are ignored;
/// when present a note is appended to `warnings`.
InvariantValue jkss(const TwistedDiagram& d,
                    std::vector<std::string>* warnings = nullptr);

/// Twisted-link invariant det(M~ - P~); no writhe sign. Defined for every
/// well-formed diagram. Equal, term for term, to jkss of the double
/// covering diagram.
InvariantValue twisted_jkss(const TwistedDiagram& d,
                            std::vector<std::string>* warnings = nullptr);

}  // namespace twistlink
