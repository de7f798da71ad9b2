#pragma once

#include "corrcast/entropy.hpp"
#include "corrcast/network.hpp"

namespace corrcast::fixtures {

/// Two-source butterfly: s1->3, s1->t1, s2->3, s2->t2, 3->4, 4->t1, 4->t2, all unit capacity.
Network butterfly();

/// Butterfly with every capacity multiplied by `factor`.
Network butterfly_scaled(const Rational& factor);

/// Two independent uniform bits named s1, s2.
SourceModel uniform_pair();

/// Two relays, one per sink: s1->t1, s1->3, s2->3 (h), 3->t1 and the mirror image for t2,
/// with h = h(p) snapped to a 1e-12 grid. rho_N = {h, h, 2}.
Network example2_network(double p);

/// Doubly symmetric binary source with crossover p: P(x1 != x2) = p, uniform marginals.
/// p is snapped to a 1e-12 grid so the pmf is exact.
SourceModel dsbs(double p);

}  // namespace corrcast::fixtures
