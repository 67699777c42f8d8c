#include <doctest.h>

#include <random>

#include "liemarkov/closure.hpp"
#include "liemarkov/constructors.hpp"
#include "liemarkov/errors.hpp"
#include "liemarkov/linalg.hpp"
#include "liemarkov/symmetry.hpp"
#include "test_support.hpp"

using namespace liemarkov;
using namespace liemarkov::testing;

namespace {

ModelSubspace model_of(const CayleyTable& t) { return rate_basis(regular_rep(t)); }

const ModelSubspace& k3st() {
  static const ModelSubspace m = pattern_model({"* a b d", "a * d b", "b d * a", "d b a *"});
  return m;
}

// Oracle: the fixed-point system K_s Q K_s^T = Q plus zero column sums,
// solved directly over the k^2 unknown entries.
int fixed_point_dimension(const std::vector<Perm>& group, int k) {
  std::vector<Eigen::Matrix<Rational, 1, Eigen::Dynamic>> equations;
  for (const Perm& s : group) {
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        Eigen::Matrix<Rational, 1, Eigen::Dynamic> row =
            Eigen::Matrix<Rational, 1, Eigen::Dynamic>::Constant(k * k, Rational(0));
        row(s(i) * k + s(j)) += 1;
        row(i * k + j) -= 1;
        equations.push_back(row);
      }
    }
  }
  for (int j = 0; j < k; ++j) {
    Eigen::Matrix<Rational, 1, Eigen::Dynamic> row =
        Eigen::Matrix<Rational, 1, Eigen::Dynamic>::Constant(k * k, Rational(0));
    for (int i = 0; i < k; ++i) row(i * k + j) = 1;
    equations.push_back(row);
  }
  RatMatrix a(static_cast<Eigen::Index>(equations.size()), k * k);
  for (std::size_t n = 0; n < equations.size(); ++n) a.row(static_cast<Eigen::Index>(n)) = equations[n];
  return static_cast<int>(null_space<Rational>(a).cols());
}

}  // namespace

TEST_CASE("group validation names the failed axiom") {
  auto message = [](const CayleyTable& t) {
    try {
      GroupSpec g(t);
    } catch (const NotAGroup& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(table({{1, 0}, {0, 0}})).find("associative") != std::string::npos);
  CHECK(message(left_zero(3)).find("identity") != std::string::npos);
  CHECK(message(two_state(2)).find("inverse") != std::string::npos);
  CHECK(message(cyclic(4)).empty());
  CHECK(symmetric_group_s3().order() == 6);
  CHECK_FALSE(symmetric_group_s3().is_abelian());
  CHECK(klein_group().is_abelian());
}

TEST_CASE("group-based models") {
  const ModelSubspace c2 = group_based_model(cyclic_group(2));
  CHECK(c2.dim == 1);
  CHECK(c2.basis[0] == int_matrix(2, {-1, 1, 1, -1}));
  CHECK(c2.same_span(model_of(two_state(5))));

  const ModelSubspace v4 = group_based_model(klein_group());
  CHECK(v4.dim == 3);
  CHECK(v4.same_span(k3st()));

  const GroupSpec s3 = symmetric_group_s3();
  const ModelSubspace m = group_based_model(s3);
  CHECK(m.dim == 5);
  // basis[n] is L_g for element g = labels[n] - 1; the identity gives L_e = 0.
  auto generator = [&](int g) -> IntMatrix {
    for (std::size_t n = 0; n < m.basis.size(); ++n)
      if (m.labels[n] - 1 == g) return m.basis[n];
    return IntMatrix::Zero(6, 6);
  };
  int pairs = 0;
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      if (a == s3.identity() || b == s3.identity()) continue;
      CHECK(commutator(generator(a), generator(b)) ==
            IntMatrix(generator(s3.multiply(a, b)) - generator(s3.multiply(b, a))));
      ++pairs;
    }
  }
  CHECK(pairs == 25);
  CHECK(check_algebra_closed(m).closed);
}

TEST_CASE("group-based construction matches the semigroup pipeline entrywise") {
  for (const GroupSpec& g :
       {cyclic_group(2), cyclic_group(3), cyclic_group(4), klein_group(), symmetric_group_s3()}) {
    const ModelSubspace direct = group_based_model(g);
    const ModelSubspace via_rep = model_of(g.table());
    CHECK(direct.same_span(via_rep));
    CHECK(direct.basis == via_rep.basis);
    CHECK(direct.dim == g.order() - 1);
  }
}

TEST_CASE("abelian rate pattern") {
  const GroupSpec z3 = cyclic_group(3);
  const Rational alpha(2), beta(3);
  const RatMatrix q = abelian_rate_pattern(z3, {Rational(0), beta, alpha});
  RatMatrix expected(3, 3);
  expected << -alpha - beta, alpha, beta,
              beta, -alpha - beta, alpha,
              alpha, beta, -alpha - beta;
  CHECK(q == expected);

  CHECK(abelian_rate_pattern(z3, {Rational(0), Rational(0), Rational(0)}).isZero());

  const RatMatrix bs = abelian_rate_pattern(cyclic_group(2), {Rational(0), Rational(5, 2)});
  CHECK(bs == (RatMatrix(2, 2) << Rational(-5, 2), Rational(5, 2), Rational(5, 2), Rational(-5, 2)).finished());

  CHECK_THROWS_AS(abelian_rate_pattern(symmetric_group_s3(), std::vector<Rational>(6, Rational(1))),
                  NotAGroup);
  CHECK_THROWS_AS(abelian_rate_pattern(z3, {Rational(1)}), OrderMismatch);

  std::mt19937 rng(9);
  std::uniform_int_distribution<int> num(0, 20), den(1, 7);
  for (const GroupSpec& g : {cyclic_group(2), cyclic_group(3), cyclic_group(4), klein_group()}) {
    const ModelSubspace m = group_based_model(g);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> f;
      for (int e = 0; e < g.order(); ++e) f.emplace_back(num(rng), den(rng));
      CHECK(contains(m, abelian_rate_pattern(g, f)).has_value());
    }
  }
}

TEST_CASE("equivariant models") {
  const auto d4 = parse_perm_list(
      "e,(1 2),(3 4),(1 2)(3 4),(1 3)(2 4),(1 4)(2 3),(1 3 2 4),(1 4 2 3)", 4);
  const ModelSubspace k2st = equivariant_model(d4, 4);
  CHECK(k2st.dim == 2);
  CHECK(k2st.same_span(pattern_model({"* a b b", "a * b b", "b b * a", "b b a *"})));
  CHECK(fixed_point_dimension(d4, 4) == 2);

  const ModelSubspace general = equivariant_model({Perm(4)}, 4);
  CHECK(general.dim == 12);
  CHECK(fixed_point_dimension({Perm(4)}, 4) == 12);

  const ModelSubspace full = equivariant_model(Perm::all(4), 4);
  CHECK(full.dim == 1);
  CHECK(fixed_point_dimension(Perm::all(4), 4) == 1);

  const auto v4 = parse_perm_list("e,(1 2)(3 4),(1 3)(2 4),(1 4)(2 3)", 4);
  CHECK(equivariant_model(v4, 4).dim == fixed_point_dimension(v4, 4));
  CHECK(equivariant_model(Perm::all(3), 3).dim == fixed_point_dimension(Perm::all(3), 3));

  for (const auto& group : {d4, v4, Perm::all(4), std::vector<Perm>{Perm(4)}}) {
    const ModelSubspace m = equivariant_model(group, 4);
    CHECK(check_algebra_closed(m).closed);
    CHECK(check_lie_closed(m).closed);
    for (const Perm& s : group)
      for (const IntMatrix& b : m.basis) CHECK(conjugate(b, s) == b);
  }

  CHECK_THROWS_AS(equivariant_model(parse_perm_list("e,(1 2 3)", 4), 4), Error);
  CHECK_THROWS_AS(equivariant_model({Perm(3)}, 4), OrderMismatch);
}

TEST_CASE("fixtures") {
  const ModelSubspace gm2 = fixture("GM2").subspace;
  CHECK(gm2.dim == 2);
  CHECK(gm2.basis[0] == int_matrix(2, {-1, 0, 1, 0}));
  CHECK(gm2.basis[1] == int_matrix(2, {0, 1, 0, -1}));
  CHECK(commutator(gm2.basis[0], gm2.basis[1]) == IntMatrix(gm2.basis[0] - gm2.basis[1]));
  CHECK(IntMatrix(gm2.basis[0] * gm2.basis[0]) == IntMatrix(-gm2.basis[0]));
  CHECK(IntMatrix(gm2.basis[0] * gm2.basis[1]) == IntMatrix(-gm2.basis[1]));
  CHECK(IntMatrix(gm2.basis[1] * gm2.basis[0]) == IntMatrix(-gm2.basis[0]));
  CHECK(gm2.same_span(model_of(two_state(3))));

  const ModelSubspace jj3 = fixture("JJ3").subspace;
  CHECK(jj3.dim == 2);
  CHECK(commutator(jj3.basis[0], jj3.basis[1]) == IntMatrix(jj3.basis[0] - jj3.basis[1]));
  for (const IntMatrix& b : jj3.basis) CHECK(b.colwise().sum().isZero());

  const ModelSubspace sym = fixture("SYM").subspace;
  CHECK(sym.dim == 6);
  for (const IntMatrix& b : sym.basis) CHECK(b - IntMatrix(b.transpose()) == IntMatrix::Zero(4, 4));

  CHECK_THROWS_AS(fixture("GTR"), Error);
}

TEST_CASE("Model 3.3b: quoted table, rate pattern and C4") {
  const CayleyTable quoted = quoted_model_33b_table();
  CHECK_FALSE(is_associative(quoted));
  CHECK_FALSE(is_associative(reverse(quoted)));

  // Left-multiplication matrices of the printed table, built without the
  // associativity requirement, span exactly the quoted rate pattern.
  std::vector<IntMatrix> raw;
  for (int i = 0; i < 4; ++i) {
    IntMatrix a = IntMatrix::Zero(4, 4);
    for (int j = 0; j < 4; ++j) a(quoted.at(i, j), j) = 1;
    raw.push_back(a - IntMatrix::Identity(4, 4));
  }
  const ModelSubspace pattern = pattern_model({"* a b c", "a * c b", "c b * a", "b c a *"});
  CHECK(make_subspace(4, raw).same_span(pattern));
  CHECK(canonical_subspace(group_based_model(cyclic_group(4))) == canonical_subspace(pattern));
  CHECK_FALSE(canonical_subspace(pattern) == canonical_subspace(k3st()));
}
