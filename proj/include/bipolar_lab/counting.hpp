#pragma once
// Exact closed-form counts and identities: class counting formulas, Catalan
// and Narayana numbers, hook length / hook content products, and brute-force
// standard-tableau enumeration used as an oracle.

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <vector>

#include "map_core.hpp"

namespace bipolar_lab {

using BigCount = boost::multiprecision::cpp_int;

inline BigCount factorial(long n) {
  expect(n >= 0, Err::DomainError, "factorial of negative argument");
  BigCount r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

// Product i = lo .. hi (empty product = 1). Replaces factorial quotients
// whose denominator-argument may be negative.
inline BigCount rising_product(long lo, long hi) {
  BigCount r = 1;
  for (long i = lo; i <= hi; ++i) r *= i;
  return r;
}

// Bipolar oriented quasi-triangulations with k internal vertices and
// external face degree j.
inline BigCount count_T(long k, long j) {
  expect(k >= 0 && j >= 2, Err::DomainError, "count_T requires k >= 0, j >= 2");
  BigCount num = BigCount(j) * (j - 1) * factorial(3 * k + 2 * j - 4);
  BigCount den = factorial(k) * factorial(k + j - 1) * factorial(k + j);
  expect(num % den == 0, Err::InternalError, "count_T division not exact");
  return num / den;
}

// Bipolar oriented maps with k internal vertices, l internal faces, external
// face degree j. The (k+l-2)!/(l-2)! quotient is evaluated as the product
// prod_{i=l-1}^{k+l-2} i so l in {1,2} is well-defined (and yields 0 exactly
// for the classes that are empty).
inline BigCount count_B(long k, long l, long j) {
  expect(k >= 0 && l >= 1 && j >= 2, Err::DomainError, "count_B requires k>=0, l>=1, j>=2");
  BigCount num = BigCount(j) * (j - 1) * rising_product(l - 1, k + l - 2) *
                 factorial(k + l + j - 2) * factorial(k + l + j - 3);
  BigCount den = factorial(k) * factorial(k + j) * factorial(k + j - 1) * factorial(l) *
                 factorial(l - 1);
  expect(num % den == 0, Err::InternalError, "count_B division not exact");
  return num / den;
}

// Schnyder woods on k+j+1 vertices whose first external vertex has degree j;
// equivalently bipolar oriented maps with k internal vertices, external
// degree j, and all internal faces of right length 2.
inline BigCount count_S(long k, long j) {
  expect(k >= 0 && j >= 3, Err::DomainError, "count_S requires k >= 0, j >= 3");
  BigCount num = BigCount(j) * (j - 1) * (j - 2) * factorial(2 * k + 2 * j - 4) *
                 factorial(2 * k + j - 3);
  BigCount den =
      factorial(k) * factorial(k + j) * factorial(k + j - 1) * factorial(k + j - 2);
  expect(num % den == 0, Err::InternalError, "count_S division not exact");
  return num / den;
}

inline BigCount catalan(long n) {
  expect(n >= 0, Err::DomainError, "catalan of negative argument");
  return factorial(2 * n) / (factorial(n) * factorial(n + 1));
}

// Rooted plane trees with a internal nodes and b leaves; equally rooted
// binary trees with a left and b right leaf edges. Symmetric in (a, b).
inline BigCount narayana(long a, long b) {
  expect(a >= 1 && b >= 1, Err::DomainError, "narayana requires a, b >= 1");
  BigCount num = factorial(a + b - 1) * factorial(a + b - 2);
  BigCount den = factorial(a) * factorial(a - 1) * factorial(b) * factorial(b - 1);
  expect(num % den == 0, Err::InternalError, "narayana division not exact");
  return num / den;
}

// Class-size Euler bookkeeping. Edge counts of the three classes:
//   T_{k,j}: E = 3k + 2j - 3 (l = 2k + j - 2 internal faces)
//   B_{k,l,j}: E = k + l + j - 1
//   S_{k,j}: E = 2k + 2j - 3 (l = k + j - 2, all right lengths 2)
inline long edges_T(long k, long j) { return 3 * k + 2 * j - 3; }
inline long edges_B(long k, long l, long j) { return k + l + j - 1; }
inline long edges_S(long k, long j) { return 2 * k + 2 * j - 3; }

enum class Identity {
  RemyCatalan = 1,       // (n+1) Cat_n = 2 (2n-1) Cat_{n-1}
  QuasiTriGrowth = 5,    // k T_{k,j} (j+1) = (j-1)(3k+2j-4) T_{k-1,j+1}
  BipolarGrowth = 6,     // k B_{k,l,j} (j+1) = (j-1)(k+l-2) B_{k-1,l,j+1}
  SchnyderGrowth = 7,    // k S_{k,j} (j+1) = (j-2)(2k+j-3) S_{k-1,j+1}
  NarayanaExchange = 8,  // (a+1) a Nar_{a+1,b} = (b+1) b Nar_{a,b+1}
};

// Exact cross-multiplied equality checks; params are identity-specific.
inline bool identity_holds(Identity id, long p, long q = 0, long r = 0) {
  switch (id) {
    case Identity::RemyCatalan: {
      long n = p;
      expect(n >= 1, Err::DomainError, "identity 1 requires n >= 1");
      return BigCount(n + 1) * catalan(n) == BigCount(2) * (2 * n - 1) * catalan(n - 1);
    }
    case Identity::QuasiTriGrowth: {
      long k = p, j = q;
      expect(k >= 1 && j >= 2, Err::DomainError, "identity 5 requires k >= 1, j >= 2");
      return BigCount(k) * (j + 1) * count_T(k, j) ==
             BigCount(j - 1) * (3 * k + 2 * j - 4) * count_T(k - 1, j + 1);
    }
    case Identity::BipolarGrowth: {
      long k = p, l = q, j = r;
      expect(k >= 1 && l >= 1 && j >= 2, Err::DomainError,
             "identity 6 requires k >= 1, l >= 1, j >= 2");
      return BigCount(k) * (j + 1) * count_B(k, l, j) ==
             BigCount(j - 1) * (k + l - 2) * count_B(k - 1, l, j + 1);
    }
    case Identity::SchnyderGrowth: {
      long k = p, j = q;
      expect(k >= 1 && j >= 3, Err::DomainError, "identity 7 requires k >= 1, j >= 3");
      return BigCount(k) * (j + 1) * count_S(k, j) ==
             BigCount(j - 2) * (2 * k + j - 3) * count_S(k - 1, j + 1);
    }
    case Identity::NarayanaExchange: {
      long a = p, b = q;
      expect(a >= 1 && b >= 1, Err::DomainError, "identity 8 requires a, b >= 1");
      return BigCount(a + 1) * a * narayana(a + 1, b) ==
             BigCount(b + 1) * b * narayana(a, b + 1);
    }
  }
  fail(Err::DomainError, "unknown identity");
}

// Weakly decreasing row lengths; trailing zero rows are dropped.
struct YoungShape {
  std::vector<long> rows;

  explicit YoungShape(std::vector<long> r) : rows(std::move(r)) {
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    for (size_t i = 0; i + 1 < rows.size(); ++i)
      expect(rows[i] >= rows[i + 1], Err::DomainError, "rows must be weakly decreasing");
    for (long x : rows) expect(x > 0, Err::DomainError, "row lengths must be nonnegative");
  }

  long cells() const {
    long n = 0;
    for (long x : rows) n += x;
    return n;
  }
  long col_height(long c) const {
    long h = 0;
    for (long x : rows)
      if (x > c) ++h;
    return h;
  }
  // Number of cells to the right in the row plus below in the column plus 1.
  long hook(long r, long c) const { return (rows[r] - c) + (col_height(c) - r) - 1; }
  long content(long r, long c) const { return c - r; }
};

// (k+j-2, k+j-2, k): the three-row shape attached to the (k, j) classes.
inline YoungShape shape_for_class(long k, long j) {
  expect(k >= 0 && j >= 2, Err::DomainError, "shape requires k >= 0, j >= 2");
  return YoungShape({k + j - 2, k + j - 2, k});
}

// Standard Young tableaux of the shape: n! / prod hooks.
inline BigCount hook_length_count(const YoungShape& s) {
  BigCount denom = 1;
  for (size_t r = 0; r < s.rows.size(); ++r)
    for (long c = 0; c < s.rows[r]; ++c) denom *= s.hook(static_cast<long>(r), c);
  BigCount num = factorial(s.cells());
  expect(num % denom == 0, Err::InternalError, "hook length division not exact");
  return num / denom;
}

// Semistandard Young tableaux with entries bounded by K:
// prod (K + content) / hook, exact division asserted.
inline BigCount hook_content_count(const YoungShape& s, long K) {
  expect(K >= 1, Err::DomainError, "hook_content_count requires K >= 1");
  BigCount num = 1, den = 1;
  for (size_t r = 0; r < s.rows.size(); ++r)
    for (long c = 0; c < s.rows[r]; ++c) {
      num *= K + s.content(static_cast<long>(r), c);
      den *= s.hook(static_cast<long>(r), c);
    }
  if (num == 0) return 0;
  expect(num % den == 0, Err::InternalError, "hook content division not exact");
  return num / den;
}

// Direct enumeration of standard fillings; oracle for hook_length_count.
inline BigCount syt_bruteforce(const YoungShape& s) {
  const int rows = static_cast<int>(s.rows.size());
  if (rows == 0) return 1;
  std::vector<long> fill(rows, 0);  // cells already placed per row
  const long n = s.cells();
  BigCount count = 0;
  // Place 1..n; a cell (r, fill[r]) is addable when fill[r] < rows[r] and
  // (r == 0 or fill[r-1] > fill[r]).
  std::vector<int> stack;
  std::function<void(long)> rec = [&](long placed) {
    if (placed == n) {
      ++count;
      return;
    }
    for (int r = 0; r < rows; ++r) {
      if (fill[r] >= s.rows[r]) continue;
      if (r > 0 && fill[r - 1] <= fill[r]) continue;
      ++fill[r];
      rec(placed + 1);
      --fill[r];
    }
  };
  rec(0);
  return count;
}

}  // namespace bipolar_lab
