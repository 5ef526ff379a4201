#include "testkit.hpp"

namespace shl::testkit {

namespace {

constexpr unsigned S = 1, Z = 2, A = 4, T = 8, D = 16, E = 32, O = 64, Op = 128, C = 256;

unsigned collapse(unsigned f) {
  if ((f & ~(S | Z | A)) == 0) return 0;
  if (f & A) {
    const unsigned rest = f & ~A;
    if (rest == D || rest == O || rest == (D | O)) return rest;
  }
  return f;
}

}  // namespace

ExpectedClass expected_classification(unsigned raw) {
  using St = engine::ClassificationResult::Status;
  using Fmp = engine::ClassificationResult::Fmp;
  const unsigned f = collapse(raw);
  auto sup = [f](unsigned m) { return (f & m) == m; };
  auto sub = [f](unsigned m) { return (f & ~m) == 0; };
  auto out = [f](St s, Fmp m, bool g) { return ExpectedClass{scl::FeatureSet::from_bits(f), s, m, g}; };
  if (sup(S | O)) return out(St::Undecidable, Fmp::Unknown, true);
  if (sup(S | A | C) || sup(S | E | C)) return out(St::Undecidable, Fmp::Unknown, false);
  if (sup(S | E) && (f & (O | Op))) return out(St::Undecidable, Fmp::Unknown, true);
  if (sup(S | Z | A | E)) return out(St::Undecidable, Fmp::Unknown, false);
  if (sub(S | Z | A)) return out(St::Decidable, Fmp::Holds, false);
  if (sub(Z | A | D | E)) return out(St::Decidable, Fmp::Holds, false);
  if (sub(Z | A | D | E | C)) return out(St::Decidable, (f & C) ? Fmp::Fails : Fmp::Holds, false);
  if (sub(S | Z | A | D)) return out(St::Decidable, Fmp::Holds, false);
  if (sub(S | Z | A | T | D)) return out(St::Decidable, sup(S | T | D) ? Fmp::Fails : Fmp::Holds, false);
  return out(St::Open, (sup(O) || sup(E | Op)) ? Fmp::Fails : Fmp::Unknown, false);
}

}  // namespace shl::testkit
