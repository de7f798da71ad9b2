#include "corrcast/fixtures.hpp"

#include "corrcast/error.hpp"

namespace corrcast::fixtures {

Network butterfly() { return butterfly_scaled(1); }

Network butterfly_scaled(const Rational& factor) {
  ExtRational c(factor);
  return Network({"s1", "s2", "3", "4", "t1", "t2"},
                 {{0, 2, c}, {0, 4, c}, {1, 2, c}, {1, 5, c}, {2, 3, c}, {3, 4, c}, {3, 5, c}}, {0, 1}, {4, 5});
}

SourceModel uniform_pair() {
  SourceModel m{{"s1", "s2"}, {2, 2}, {}};
  for (std::uint32_t a = 0; a < 2; ++a)
    for (std::uint32_t b = 0; b < 2; ++b) m.pmf.push_back({{a, b}, 0.25, Rational(1, 4)});
  return m;
}

Network example2_network(double p) {
  ExtRational h(snap_rational(binary_entropy(p)));
  ExtRational one(1);
  return Network({"s1", "s2", "3", "4", "t1", "t2"},
                 {{0, 4, one}, {0, 2, one}, {1, 2, h}, {2, 4, one}, {1, 5, one}, {1, 3, one}, {0, 3, h}, {3, 5, one}},
                 {0, 1}, {4, 5});
}

SourceModel dsbs(double p) {
  if (!(p >= 0 && p <= 1)) throw PreconditionError("crossover probability outside [0,1]");
  const Rational q = snap_rational(p);
  const Rational same = (1 - q) / 2;
  const Rational diff = q / 2;
  SourceModel m{{"s1", "s2"}, {2, 2}, {}};
  m.pmf.push_back({{0, 0}, same.get_d(), same});
  m.pmf.push_back({{0, 1}, diff.get_d(), diff});
  m.pmf.push_back({{1, 0}, diff.get_d(), diff});
  m.pmf.push_back({{1, 1}, same.get_d(), same});
  return m;
}

}  // namespace corrcast::fixtures
