// The dg homomorphism from the quiver algebra B(n,k,S) to the strands
// algebra A(n,k,S): letter images, images of canonical basis elements (both
// the letter-by-letter product and the closed form), and the bulk check that
// every defining quiver relation maps to a true identity.
#pragma once

#include <vector>

#include "strands/algebra.hpp"
#include "strands/istates.hpp"
#include "strands/osz.hpp"
#include "strands/util.hpp"

namespace strands {

using PhiReport = CheckReport;

// Image of a single quiver letter applied at x. R_i and L_i must be legal
// moves at x (DomainError otherwise); C_i requires i in S (ParameterError).
// U_i is total: it vanishes when x meets neither side of line i, and is a
// two-term sum when x meets both.
F2Element phi_label(const AlgebraContext& ctx, const IState& x,
                    const GeneratorLabel& label);

// Image of a normal form U^r·gamma_{x,y}·C^c: the letter images multiplied
// along the canonical dot path, then left-multiplied at x by the U_i image
// r_i times per line and by C_i per c. (U and C images are central up to
// the relations, so the placement is a convention, not a choice.)
F2Element phi_basis(const OSGenerator& g);

// The same image assembled without letter products: columns (1+2r_i, 0) or
// (0, 1+2r_i) on crossed lines per the sign of v_i, a two-term speed-2r_k
// sum on each uncrossed line with r_k > 0, c carried verbatim, expanded and
// filtered down to valid terms with right idempotent y.
F2Element phi_closed_form(const OSGenerator& g);

// Linear extension of phi_basis.
F2Element phi_elem(const OSElement& e);

// Evaluates every instance of the defining quiver relations over V(n,k)
// through phi_label products: loop, distant commutation, two-line pass,
// U centrality/vanishing, C centrality and C^2 = 0. A correct build returns
// an empty failure list.
PhiReport relation_check(int n, int k, const std::vector<int>& s);

}  // namespace strands
