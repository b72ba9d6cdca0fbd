#pragma once

// Pointwise product of three basis expansions.
//
// Per axis, a product of three sines expands into four signed sines:
//
//   sin A sin B sin C = (1/4) [ -sin(A+B+C) + sin(-A+B+C)
//                               + sin(A-B+C) + sin(A+B-C) ],
//
// so P_{m1,n1} P_{m2,n2} P_{m3,n3} scatters onto 16 signed targets, with
// temporal index options {m1+m2+m3+1 (sign -), -m1+m2+m3, m1-m2+m3,
// m1+m2-m3 (each +)} and the same pattern spatially; negative targets fold
// back by the reflection rules. The weighted l1 norm is submultiplicative
// over this expansion: ||uvw|| <= ||u|| ||v|| ||w||.
//
// Tail budgets propagate by the coarse product rule, evaluated left to right
// with full norms:  u.tail ||v|| ||w|| + ||u|| v.tail ||w|| + ||u|| ||v|| w.tail.

#include "specwave/field.hpp"

namespace specwave {

// Production kernel. Factors the 16-term rule through a dense even cosine
// lattice: scatter u*v onto cos(2p tau) cos(2r x) cells, then gather every
// output sine mode from w against the lattice. Gathers are per-output-cell
// with a fixed serial accumulation order, so results are independent of the
// OpenMP thread count.
SpectralField triple_product(const SpectralField& u, const SpectralField& v,
                             const SpectralField& w);

// Direct 16-term scatter. Serial reference for tests and the benchmark;
// algebraically identical to the production kernel.
SpectralField triple_product_reference(const SpectralField& u, const SpectralField& v,
                                       const SpectralField& w);

}  // namespace specwave
