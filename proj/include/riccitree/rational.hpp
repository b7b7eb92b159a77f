#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace riccitree {

// Exact rational scalar; degrees are small integers so entries stay tiny.
using Rat = mpq_class;
using RatMatrix = std::vector<std::vector<Rat>>;

// mpq_class(num, den) keeps the fraction as given; equality on unreduced
// values is unreliable.  Every ratio built from variables goes through here.
inline Rat frac(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Monic characteristic polynomial of det(xI - A): returns (c1, ..., cm) with
// p(x) = x^m + c1 x^{m-1} + ... + cm, computed by the Faddeev-LeVerrier
// recurrence in exact arithmetic.  O(m^4) rational multiplies -- fine for the
// desk-scale matrices here (m <= 16 in the searches).
std::vector<Rat> charpoly(const RatMatrix& a);

std::vector<Rat> mat_vec(const RatMatrix& a, const std::vector<Rat>& x);

double to_double(const Rat& r);
std::string to_string(const Rat& r);  // "num/den" (or just "num" when den = 1)

// Horner evaluation of the monic polynomial given by coefficients (c1..cm).
double eval_charpoly(const std::vector<Rat>& coeffs, double x);

}  // namespace riccitree
