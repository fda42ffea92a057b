#include <iostream>

#include "so2n/domainiv.hpp"
#include "so2n/forms.hpp"

using namespace so2n;

int main() {
  // The exceptional so(1,2) inside so(2,3).
  Representation<QuadExt> rep(builtin::appendix_so12());
  auto v = decide_irreducibility(rep);
  std::cout << "APPENDIX_SO12: " << irreducibility_name(v.verdict) << (verify_verdict(rep, v) ? " (verified)" : "")
            << "\n";
  auto t = classify_type(rep, v);
  std::cout << "type " << rep_type_name(t.type) << ", commutant dim " << t.commutant_dim << "\n";

  auto forms = invariant_forms(rep, Symmetry::Symmetric);
  auto s = signature(forms.basis.front());
  std::cout << "invariant symmetric form of signature (" << s.neg << "," << s.pos << ")\n";

  // so(1,1) + so(1,1) fixes a plane and so is reducible.
  Representation<Rational> g2(builtin::g2_isometry(1, 1, 2));
  auto w = decide_irreducibility(g2);
  std::cout << "G2 isometry: " << irreducibility_name(w.verdict) << ", witness dim " << w.witness.dim() << "\n";

  DomainPoint z{{Rational(1, 2), 0}};
  auto f = cartan_iv_map(z);
  std::cout << "f(1/2, 0) = [";
  for (std::size_t k = 0; k < f.size(); ++k) std::cout << (k ? " : " : "") << format_scalar(f.z[k]);
  std::cout << "], in Lie ball: " << std::boolalpha << in_lieball(f) << "\n";
}
