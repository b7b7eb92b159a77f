#include "riccitree/rational.hpp"

namespace riccitree {

std::vector<Rat> charpoly(const RatMatrix& a) {
  int m = static_cast<int>(a.size());
  RatMatrix M(m, std::vector<Rat>(m, 0));
  std::vector<Rat> cs;
  cs.reserve(m);
  Rat c = 1;
  for (int k = 1; k <= m; ++k) {
    // M <- A*M + c*I
    RatMatrix M2(m, std::vector<Rat>(m, 0));
    for (int i = 0; i < m; ++i)
      for (int l = 0; l < m; ++l) {
        if (a[i][l] == 0) continue;
        for (int j = 0; j < m; ++j) M2[i][j] += a[i][l] * M[l][j];
      }
    for (int i = 0; i < m; ++i) M2[i][i] += c;
    // c <- -tr(A*M2)/k
    Rat tr = 0;
    for (int i = 0; i < m; ++i)
      for (int l = 0; l < m; ++l) tr += a[i][l] * M2[l][i];
    c = -tr / k;
    c.canonicalize();
    cs.push_back(c);
    M = std::move(M2);
  }
  return cs;
}

std::vector<Rat> mat_vec(const RatMatrix& a, const std::vector<Rat>& x) {
  std::vector<Rat> y(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

double to_double(const Rat& r) { return r.get_d(); }

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double eval_charpoly(const std::vector<Rat>& coeffs, double x) {
  double p = 1.0;
  for (const Rat& c : coeffs) p = p * x + c.get_d();
  return p;
}

}  // namespace riccitree
